// Command-line front end for the co-authorship network toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "snm/errors.hpp"
#include "snm/index.hpp"
#include "snm/network.hpp"
#include "snm/pipeline.hpp"
#include "snm/stats.hpp"
#include "snm/timeline.hpp"

namespace {

snm::Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw snm::Error(snm::Error::Kind::Io, "cannot open corpus file " + path);
  }
  return snm::Corpus::parse_jsonl(in);
}

snm::SeedList load_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw snm::Error(snm::Error::Kind::Io, "cannot open seeds file " + path);
  }
  return snm::SeedList::parse(in);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw snm::Error(snm::Error::Kind::Io, "cannot write " + path);
  }
}

std::vector<std::string> split_csv_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream stream(value);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::string fmt4(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", v);
  return buffer;
}

struct Options {
  std::string corpus_path;
  std::string seeds_path;
  std::optional<int> horizon;
  std::string mode = "cumulative";
  std::string chain = "seeds,papers,vertices,edges";
  double alpha_level = 0.05;
  std::string out;
  std::string format = "dot";
  std::string seed_name;
  std::string name;
  std::string other;
  std::string match = "phrase";
};

snm::RunConfig to_config(const Options& opt) {
  snm::RunConfig config;
  config.corpus_path = opt.corpus_path;
  config.seeds_path = opt.seeds_path;
  config.horizon = opt.horizon;
  if (opt.mode == "cumulative") {
    config.mode = snm::SeriesMode::Cumulative;
  } else if (opt.mode == "accretion") {
    config.mode = snm::SeriesMode::Accretion;
  } else {
    throw snm::Error(snm::Error::Kind::Usage,
                     "--mode must be cumulative or accretion");
  }
  config.chain = split_csv_list(opt.chain);
  config.alpha_level = opt.alpha_level;
  config.output_dir = opt.out;
  return config;
}

int run_ingest(const Options& opt) {
  snm::Corpus corpus = load_corpus(opt.corpus_path);
  std::cout << "records: " << corpus.size() << "\n"
            << "actors: " << corpus.registry().size() << "\n";
  if (!corpus.empty()) {
    std::cout << "years: " << corpus.year_min() << "-" << corpus.year_max()
              << "\n";
  }
  return 0;
}

int run_growth(const Options& opt) {
  snm::Corpus corpus = load_corpus(opt.corpus_path);
  int horizon = opt.horizon.value_or(corpus.year_max());
  std::string csv;
  if (!opt.seed_name.empty()) {
    snm::GrowthSeries series =
        snm::growth_series(corpus, snm::make_actor(opt.seed_name), horizon);
    csv = "year,papers,vertices,edges\n";
    for (const snm::GrowthRow& row : series.rows) {
      csv += std::to_string(row.year) + ',' + std::to_string(row.papers) +
             ',' + std::to_string(row.vertices) + ',' +
             std::to_string(row.edges) + '\n';
    }
  } else {
    snm::SeedList seeds = load_seeds(opt.seeds_path);
    snm::AggregateSeries series = snm::aggregate_series(corpus, seeds, horizon);
    csv = "year,seeds,papers,vertices,edges\n";
    std::vector<long long> s, p, v, e;
    for (const snm::AggregateRow& row : series.rows) {
      s.push_back(row.seeds);
      p.push_back(row.papers);
      v.push_back(row.vertices);
      e.push_back(row.edges);
    }
    if (opt.mode == "accretion" && !series.rows.empty()) {
      s = snm::accretion(s);
      p = snm::accretion(p);
      v = snm::accretion(v);
      e = snm::accretion(e);
    }
    for (std::size_t i = 0; i < series.rows.size(); ++i) {
      csv += std::to_string(series.rows[i].year) + ',' + std::to_string(s[i]) +
             ',' + std::to_string(p[i]) + ',' + std::to_string(v[i]) + ',' +
             std::to_string(e[i]) + '\n';
    }
  }
  write_output(opt.out, csv);
  return 0;
}

const snm::ChainModel& pipeline_chain(const snm::ReportBundle& bundle) {
  return bundle.chain;
}

int run_regress(const Options& opt) {
  snm::RunConfig config = to_config(opt);
  config.output_dir.clear();
  snm::ReportBundle bundle = snm::run_pipeline(config);
  const snm::ChainModel& chain = pipeline_chain(bundle);
  std::string out = "dependent\tintercept";
  for (std::size_t j = 0; j + 1 < chain.names.size(); ++j) {
    out += '\t' + chain.names[j];
  }
  out += '\n';
  for (std::size_t j = 0; j < chain.fits.size(); ++j) {
    out += chain.names[j + 1] + '\t' + fmt4(chain.fits[j].intercept);
    for (double c : chain.fits[j].coefficients) out += '\t' + fmt4(c);
    out += '\n';
  }
  write_output(opt.out, out);
  return 0;
}

int run_effects(const Options& opt) {
  snm::RunConfig config = to_config(opt);
  config.output_dir.clear();
  snm::ReportBundle bundle = snm::run_pipeline(config);
  const snm::EffectDecomposition& e = bundle.effects;
  std::string out = e.source + " -> " + e.target + "\n";
  out += "direct: " + fmt4(e.direct) + "\n";
  out += "indirect: " + fmt4(e.indirect) + "\n";
  out += "total: " + fmt4(e.total) + "\n";
  write_output(opt.out, out);
  return 0;
}

int run_runstest(const Options& opt) {
  snm::RunConfig config = to_config(opt);
  config.output_dir.clear();
  snm::ReportBundle bundle = snm::run_pipeline(config);
  std::string out = "factor,n1,n2,r,mu,sigma,z,decision\n";
  for (const snm::NamedRunsTest& named : bundle.runs) {
    const snm::RunsTestResult& r = named.result;
    char line[160];
    std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%.2f,%.2f,%.2f,%s\n",
                  named.factor.c_str(), r.n1, r.n2, r.runs, r.mu_r, r.sigma_r,
                  r.z, r.reject ? "reject" : "accept");
    out += line;
  }
  write_output(opt.out, out);
  return 0;
}

int run_alpha(const Options& opt) {
  snm::RunConfig config = to_config(opt);
  config.output_dir.clear();
  snm::ReportBundle bundle = snm::run_pipeline(config);
  std::string out = "k: " + std::to_string(bundle.alpha.k) + "\n";
  out += "sum_component_variances: " + fmt4(bundle.alpha.sum_component_variances) + "\n";
  out += "total_variance: " + fmt4(bundle.alpha.total_variance) + "\n";
  out += "alpha, band: " + fmt4(bundle.alpha.alpha) + ", " +
         std::string(snm::to_string(bundle.alpha.band)) + "\n";
  write_output(opt.out, out);
  return 0;
}

int run_hits(const Options& opt) {
  snm::Corpus corpus = load_corpus(opt.corpus_path);
  snm::OccurrenceIndex index = snm::OccurrenceIndex::build(corpus);
  snm::ActorName name = snm::make_actor(opt.name);
  std::string out;
  if (opt.other.empty()) {
    out += "phrase," + std::to_string(index.hit_count(name, snm::HitMode::Phrase)) + "\n";
    out += "bag," + std::to_string(index.hit_count(name, snm::HitMode::Bag)) + "\n";
  } else {
    snm::ActorName other = snm::make_actor(opt.other);
    out += "phrase," +
           std::to_string(index.cohit_count(name, other, snm::HitMode::Phrase)) + "\n";
    out += "bag," +
           std::to_string(index.cohit_count(name, other, snm::HitMode::Bag)) + "\n";
  }
  write_output(opt.out, out);
  return 0;
}

int run_export(const Options& opt) {
  snm::Corpus corpus = load_corpus(opt.corpus_path);
  int horizon = opt.horizon.value_or(corpus.year_max());
  snm::SocialNetwork net =
      snm::extract_network(corpus, snm::make_actor(opt.seed_name), horizon);
  std::string out;
  if (opt.format == "dot") {
    out = snm::export_graph_dot(net);
  } else if (opt.format == "csv") {
    out = snm::export_graph_matrix_csv(net);
  } else {
    throw snm::Error(snm::Error::Kind::Usage, "--format must be dot or csv");
  }
  write_output(opt.out, out);
  return 0;
}

int run_all(const Options& opt) {
  snm::RunConfig config = to_config(opt);
  if (config.output_dir.empty()) {
    throw snm::Error(snm::Error::Kind::Usage, "the all subcommand needs --out DIR");
  }
  snm::ReportBundle bundle = snm::run_pipeline(config);
  snm::emit_report(bundle, config.output_dir);
  std::cout << "report written to " << config.output_dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-authorship network growth and behaviour toolkit"};
  app.require_subcommand(1);

  Options opt;
  int horizon_flag = -1;

  auto add_common = [&](CLI::App* cmd, bool needs_seeds) {
    cmd->add_option("--corpus", opt.corpus_path, "corpus JSONL path")->required();
    if (needs_seeds) {
      cmd->add_option("--seeds", opt.seeds_path, "seed list path");
    }
    cmd->add_option("--horizon", horizon_flag, "last year to include");
    cmd->add_option("--out", opt.out, "output file or directory");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "validate a corpus file");
  add_common(ingest, false);

  CLI::App* growth = app.add_subcommand(
      "growth", "growth series CSV (per seed with --seed, aggregate otherwise)");
  add_common(growth, true);
  growth->add_option("--seed", opt.seed_name, "seed name");
  growth->add_option("--mode", opt.mode, "cumulative|accretion");

  for (const char* name : {"regress", "effects", "runstest", "alpha"}) {
    CLI::App* cmd = app.add_subcommand(
        name, std::string("pipeline stage: ") + name);
    add_common(cmd, true);
    cmd->get_option("--seeds")->required();
    cmd->add_option("--mode", opt.mode, "cumulative|accretion");
    cmd->add_option("--chain", opt.chain, "comma-separated chain variables");
    cmd->add_option("--alpha-level", opt.alpha_level, "two-sided significance");
  }

  CLI::App* hits = app.add_subcommand("hits", "occurrence / co-occurrence counts");
  add_common(hits, false);
  hits->add_option("--name", opt.name, "actor name")->required();
  hits->add_option("--other", opt.other, "second actor for co-hits");

  CLI::App* export_cmd = app.add_subcommand("export", "graph export for one seed");
  add_common(export_cmd, false);
  export_cmd->add_option("--seed", opt.seed_name, "seed name")->required();
  export_cmd->add_option("--format", opt.format, "dot|csv");

  CLI::App* all = app.add_subcommand("all", "full pipeline into --out DIR");
  add_common(all, true);
  all->get_option("--seeds")->required();
  all->get_option("--out")->required();
  all->add_option("--mode", opt.mode, "cumulative|accretion");
  all->add_option("--chain", opt.chain, "comma-separated chain variables");
  all->add_option("--alpha-level", opt.alpha_level, "two-sided significance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (horizon_flag >= 0) opt.horizon = horizon_flag;

  try {
    if (ingest->parsed()) return run_ingest(opt);
    if (growth->parsed()) return run_growth(opt);
    if (app.get_subcommand("regress")->parsed()) return run_regress(opt);
    if (app.get_subcommand("effects")->parsed()) return run_effects(opt);
    if (app.get_subcommand("runstest")->parsed()) return run_runstest(opt);
    if (app.get_subcommand("alpha")->parsed()) return run_alpha(opt);
    if (hits->parsed()) return run_hits(opt);
    if (export_cmd->parsed()) return run_export(opt);
    if (all->parsed()) return run_all(opt);
  } catch (const snm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == snm::Error::Kind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
