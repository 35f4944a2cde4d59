#include "snm/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "snm/errors.hpp"
#include "snm/index.hpp"

namespace snm {

namespace {

std::string fmt(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Kind::Io, "cannot open corpus file " + path.string());
  }
  return Corpus::parse_jsonl(in);
}

SeedList load_seeds(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Kind::Io, "cannot open seeds file " + path.string());
  }
  return SeedList::parse(in);
}

[[noreturn]] void stage_fail(const char* stage, const Error& e) {
  throw Error(e.kind(), std::string(stage) + ": " + e.what());
}

std::vector<double> aggregate_column(const AggregateSeries& series,
                                     const std::string& name) {
  std::vector<double> column;
  column.reserve(series.rows.size());
  for (const AggregateRow& row : series.rows) {
    if (name == "seeds") {
      column.push_back(row.seeds);
    } else if (name == "papers") {
      column.push_back(row.papers);
    } else if (name == "vertices") {
      column.push_back(row.vertices);
    } else if (name == "edges") {
      column.push_back(row.edges);
    } else {
      throw Error(Error::Kind::Usage,
                  "unknown chain variable '" + name +
                      "' (expected seeds, papers, vertices or edges)");
    }
  }
  return column;
}

std::vector<double> to_deltas(const std::vector<double>& cumulative) {
  std::vector<long long> values(cumulative.begin(), cumulative.end());
  std::vector<double> deltas;
  for (long long d : accretion(values)) deltas.push_back(static_cast<double>(d));
  return deltas;
}

}  // namespace

ReportBundle run_pipeline(const RunConfig& config) {
  if (config.chain.size() < 2) {
    throw Error(Error::Kind::Usage, "chain needs at least two variables");
  }
  for (std::size_t i = 0; i < config.chain.size(); ++i) {
    for (std::size_t j = i + 1; j < config.chain.size(); ++j) {
      if (config.chain[i] == config.chain[j]) {
        throw Error(Error::Kind::Usage,
                    "chain variable '" + config.chain[i] + "' repeats");
      }
    }
  }
  if (!(config.alpha_level > 0.0 && config.alpha_level < 1.0)) {
    throw Error(Error::Kind::Usage, "significance level must lie in (0, 1)");
  }
  double critical_z = config.alpha_level == 0.05
                          ? 1.96
                          : normal_quantile(1.0 - config.alpha_level / 2.0);

  ReportBundle bundle;
  bundle.mode = config.mode;

  Corpus corpus;
  try {
    corpus = load_corpus(config.corpus_path);
  } catch (const Error& e) {
    stage_fail("corpus", e);
  }
  if (corpus.empty()) {
    throw Error(Error::Kind::Usage,
                "corpus: no records in " + config.corpus_path.string());
  }

  SeedList seeds;
  try {
    seeds = load_seeds(config.seeds_path);
  } catch (const Error& e) {
    stage_fail("seeds", e);
  }
  if (seeds.entries.empty()) {
    throw Error(Error::Kind::Usage,
                "seeds: no entries in " + config.seeds_path.string());
  }

  bundle.horizon = config.horizon.value_or(corpus.year_max());

  OccurrenceIndex index = OccurrenceIndex::build(corpus);

  try {
    for (const SeedEntry& entry : seeds.entries) {
      bundle.growth.push_back(growth_series(corpus, entry.name, bundle.horizon));

      SeedDiagnostics diag;
      diag.seed = entry.name;
      SocialNetwork net = extract_network(corpus, entry.name, bundle.horizon);
      diag.density = density_diagnostics(net);
      diag.papers =
          static_cast<int>(corpus.papers_of(entry.name.key, bundle.horizon).size());
      if (diag.papers > 0) {
        diag.first_paper = classify_first_paper(corpus, entry.name);
      }
      diag.hits_phrase = index.hit_count(entry.name, HitMode::Phrase);
      diag.hits_bag = index.hit_count(entry.name, HitMode::Bag);
      bundle.diagnostics.push_back(std::move(diag));
    }
  } catch (const Error& e) {
    stage_fail("extraction", e);
  }

  try {
    bundle.aggregate = aggregate_series(corpus, seeds, bundle.horizon);
  } catch (const Error& e) {
    stage_fail("timeline", e);
  }
  if (bundle.aggregate.rows.empty()) {
    throw Error(Error::Kind::Usage, "timeline: no seed has any paper");
  }

  try {
    std::vector<std::vector<double>> columns;
    for (const std::string& name : config.chain) {
      std::vector<double> column = aggregate_column(bundle.aggregate, name);
      columns.push_back(config.mode == SeriesMode::Accretion ? to_deltas(column)
                                                             : column);
    }
    bundle.chain = fit_chain(config.chain, columns);
    bundle.effects =
        path_effects(bundle.chain, config.chain.front(), config.chain.back());
  } catch (const Error& e) {
    stage_fail("regression", e);
  }

  try {
    std::vector<int> categories;
    bool has_pr = false, has_ap = false, has_other = false;
    for (const SeedEntry& entry : seeds.entries) {
      categories.push_back(static_cast<int>(entry.category));
      (entry.category == SeedCategory::Pr
           ? has_pr
           : entry.category == SeedCategory::Ap ? has_ap : has_other) = true;
    }
    // The category test only makes sense for a two-way split; seed lists
    // without categories skip it rather than fail the whole run.
    if ((has_pr ? 1 : 0) + (has_ap ? 1 : 0) + (has_other ? 1 : 0) == 2) {
      bundle.runs.push_back(
          NamedRunsTest{"al", runs_test(categories, critical_z)});
    }

    std::vector<double> np, hc_phrase, hc_bag;
    for (const SeedDiagnostics& diag : bundle.diagnostics) {
      np.push_back(diag.papers);
      hc_phrase.push_back(diag.hits_phrase);
      hc_bag.push_back(diag.hits_bag);
    }
    bundle.runs.push_back(NamedRunsTest{
        "np", runs_test(dichotomize_median(np), critical_z)});
    bundle.runs.push_back(NamedRunsTest{
        "hc_phrase", runs_test(dichotomize_median(hc_phrase), critical_z)});
    bundle.runs.push_back(NamedRunsTest{
        "hc_bag", runs_test(dichotomize_median(hc_bag), critical_z)});

    bundle.alpha = cronbach_alpha({np, hc_phrase, hc_bag});
  } catch (const Error& e) {
    stage_fail("randomness", e);
  }

  return bundle;
}

std::string export_graph_dot(const SocialNetwork& sn) {
  std::ostringstream out;
  out << "graph coauthorship {\n";
  for (const std::string& actor : sn.actors()) {
    out << "  \"" << actor << "\";\n";
  }
  for (const auto& [key, weight] : sn.edges()) {
    out << "  \"" << key.first << "\" -- \"" << key.second << "\" [weight="
        << weight << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graph_matrix_csv(const SocialNetwork& sn) {
  AdjacencyMatrix matrix = adjacency_matrix(sn);
  std::ostringstream out;
  for (const std::string& label : matrix.labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
    out << matrix.labels[i];
    for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
      out << ',' << matrix.entries[i][j];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

class ReportWriter {
 public:
  explicit ReportWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& content) {
    std::filesystem::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
      throw Error(Error::Kind::Io, "cannot write " + path.string());
    }
    written_.push_back(path);
  }

  void discard_written() {
    std::error_code ec;
    for (const auto& path : written_) std::filesystem::remove(path, ec);
  }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> written_;
};

std::string growth_csv(const ReportBundle& bundle) {
  std::string out = "seed,year,papers,vertices,edges\n";
  for (const GrowthSeries& series : bundle.growth) {
    for (const GrowthRow& row : series.rows) {
      out += series.seed.key + ',' + std::to_string(row.year) + ',' +
             std::to_string(row.papers) + ',' + std::to_string(row.vertices) +
             ',' + std::to_string(row.edges) + '\n';
    }
  }
  return out;
}

std::string aggregate_csv(const AggregateSeries& series, bool deltas) {
  std::string out = "year,seeds,papers,vertices,edges\n";
  std::vector<long long> s, p, v, e;
  for (const AggregateRow& row : series.rows) {
    s.push_back(row.seeds);
    p.push_back(row.papers);
    v.push_back(row.vertices);
    e.push_back(row.edges);
  }
  if (deltas && !series.rows.empty()) {
    s = accretion(s);
    p = accretion(p);
    v = accretion(v);
    e = accretion(e);
  }
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    out += std::to_string(series.rows[i].year) + ',' + std::to_string(s[i]) +
           ',' + std::to_string(p[i]) + ',' + std::to_string(v[i]) + ',' +
           std::to_string(e[i]) + '\n';
  }
  return out;
}

std::string factors_csv(const ReportBundle& bundle) {
  std::string out = "seed,papers,hits_phrase,hits_bag\n";
  for (const SeedDiagnostics& diag : bundle.diagnostics) {
    out += diag.seed.key + ',' + std::to_string(diag.papers) + ',' +
           std::to_string(diag.hits_phrase) + ',' +
           std::to_string(diag.hits_bag) + '\n';
  }
  return out;
}

std::string diagnostics_csv(const ReportBundle& bundle) {
  std::string out =
      "seed,n,nes,nec,ner,reality_over_complete,star_over_complete,"
      "reality_over_star,first_paper\n";
  for (const SeedDiagnostics& diag : bundle.diagnostics) {
    const DensityDiagnostics& d = diag.density;
    out += diag.seed.key + ',' + std::to_string(d.n) + ',' +
           std::to_string(d.nes) + ',' + std::to_string(d.nec) + ',' +
           std::to_string(d.ner) + ',' + fmt(d.reality_over_complete, 6) +
           ',' + fmt(d.star_over_complete, 6) + ',' +
           fmt(d.reality_over_star, 6) + ',';
    out += diag.first_paper ? std::string(to_string(*diag.first_paper))
                            : std::string("none");
    out += '\n';
  }
  return out;
}

std::string fits_txt(const ChainModel& chain) {
  // One row per dependent variable: intercept first, then the coefficients
  // of the earlier chain variables in order.
  std::string out = "dependent\tintercept";
  for (std::size_t j = 0; j + 1 < chain.names.size(); ++j) {
    out += '\t' + chain.names[j];
  }
  out += '\n';
  for (std::size_t j = 0; j < chain.fits.size(); ++j) {
    const RegressionFit& fit = chain.fits[j];
    out += chain.names[j + 1] + '\t' + fmt(fit.intercept, 4);
    for (double coefficient : fit.coefficients) {
      out += '\t' + fmt(coefficient, 4);
    }
    out += '\n';
  }
  return out;
}

std::string effects_txt(const EffectDecomposition& effects) {
  std::string out = "source: " + effects.source + "\n";
  out += "target: " + effects.target + "\n";
  out += "direct: " + fmt(effects.direct, 4) + "\n";
  out += "indirect: " + fmt(effects.indirect, 4) + "\n";
  out += "total: " + fmt(effects.total, 4) + "\n";
  out += "paths:\n";
  for (const PathTerm& term : effects.paths) {
    out += "  ";
    for (std::size_t i = 0; i < term.variables.size(); ++i) {
      if (i) out += " -> ";
      out += term.variables[i];
    }
    out += " = " + fmt(term.product, 4) + "\n";
  }
  return out;
}

std::string runs_csv(const std::vector<NamedRunsTest>& runs) {
  std::string out = "n1,n2,r,mu,sigma,z,decision\n";
  for (const NamedRunsTest& named : runs) {
    const RunsTestResult& r = named.result;
    out += std::to_string(r.n1) + ',' + std::to_string(r.n2) + ',' +
           std::to_string(r.runs) + ',' + fmt(r.mu_r, 2) + ',' +
           fmt(r.sigma_r, 2) + ',' + fmt(r.z, 2) + ',' +
           (r.reject ? "reject" : "accept") + '\n';
  }
  return out;
}

std::string alpha_txt(const AlphaResult& alpha) {
  std::string out = "k: " + std::to_string(alpha.k) + "\n";
  out += "sum_component_variances: " + fmt(alpha.sum_component_variances, 4) + "\n";
  out += "total_variance: " + fmt(alpha.total_variance, 4) + "\n";
  out += "alpha, band: " + fmt(alpha.alpha, 4) + ", " +
         std::string(to_string(alpha.band)) + "\n";
  return out;
}

}  // namespace

void emit_report(const ReportBundle& bundle,
                 const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    throw Error(Error::Kind::Io,
                "cannot create output directory " + output_dir.string());
  }
  ReportWriter writer(output_dir);
  try {
    writer.write("growth.csv", growth_csv(bundle));
    writer.write("aggregate.csv", aggregate_csv(bundle.aggregate, false));
    writer.write("aggregate_accretion.csv", aggregate_csv(bundle.aggregate, true));
    writer.write("factors.csv", factors_csv(bundle));
    writer.write("diagnostics.csv", diagnostics_csv(bundle));
    writer.write("fits.txt", fits_txt(bundle.chain));
    writer.write("effects.txt", effects_txt(bundle.effects));
    writer.write("runs.csv", runs_csv(bundle.runs));
    writer.write("alpha.txt", alpha_txt(bundle.alpha));
  } catch (...) {
    writer.discard_written();
    throw;
  }
}

}  // namespace snm
