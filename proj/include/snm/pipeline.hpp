#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "snm/corpus.hpp"
#include "snm/network.hpp"
#include "snm/stats.hpp"
#include "snm/timeline.hpp"

namespace snm {

enum class SeriesMode { Cumulative, Accretion };

struct RunConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path seeds_path;
  std::optional<int> horizon;  // defaults to the corpus year_max
  SeriesMode mode = SeriesMode::Cumulative;
  std::vector<std::string> chain = {"seeds", "papers", "vertices", "edges"};
  double alpha_level = 0.05;
  std::filesystem::path output_dir;
};

struct SeedDiagnostics {
  ActorName seed;
  DensityDiagnostics density;
  std::optional<FirstPaperShape> first_paper;  // absent when seed has no papers
  int papers = 0;       // n(p) at the horizon
  int hits_phrase = 0;  // "hc"
  int hits_bag = 0;     // hc
};

struct NamedRunsTest {
  std::string factor;
  RunsTestResult result;
};

struct ReportBundle {
  int horizon = 0;
  SeriesMode mode = SeriesMode::Cumulative;
  std::vector<GrowthSeries> growth;  // one per seed, seed-list order
  AggregateSeries aggregate;
  std::vector<SeedDiagnostics> diagnostics;
  ChainModel chain;
  EffectDecomposition effects;
  std::vector<NamedRunsTest> runs;  // al (when 2 categories), np, hc_phrase, hc_bag
  AlphaResult alpha;
};

/// Runs the whole analysis: per-seed series and networks, aggregate series,
/// the regression chain on the selected mode, path effects from the first to
/// the last chain variable, runs tests and Cronbach's alpha over the factor
/// columns. Module errors are rethrown with their stage name prefixed.
ReportBundle run_pipeline(const RunConfig& config);

std::string export_graph_dot(const SocialNetwork& sn);
std::string export_graph_matrix_csv(const SocialNetwork& sn);

/// Writes growth.csv, aggregate.csv, aggregate_accretion.csv, factors.csv,
/// diagnostics.csv, fits.txt, effects.txt, runs.csv and alpha.txt under
/// `output_dir`. Byte-identical across runs on identical inputs; files
/// written before a failure are removed.
void emit_report(const ReportBundle& bundle,
                 const std::filesystem::path& output_dir);

}  // namespace snm
