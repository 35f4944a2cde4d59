#pragma once

#include <span>
#include <vector>

#include "snm/corpus.hpp"

namespace snm {

struct GrowthRow {
  int year = 0;
  int papers = 0;
  int vertices = 0;
  int edges = 0;

  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

/// Cumulative per-year counts for one seed, one row per calendar year from
/// the seed's first paper through the horizon; years without new papers
/// repeat the previous counts.
struct GrowthSeries {
  ActorName seed;
  std::vector<GrowthRow> rows;
};

/// Empty series for a seed with no papers (or a horizon before its first
/// paper). Every row agrees with extract_network / papers_of at that year.
GrowthSeries growth_series(const Corpus& corpus, const ActorName& seed,
                           int horizon);

struct AggregateRow {
  int year = 0;
  int seeds = 0;     // seeds with at least one paper by that year
  int papers = 0;    // distinct papers authored by any seed
  int vertices = 0;  // distinct actors in the union of all seed networks
  int edges = 0;     // distinct actor pairs in the union

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct AggregateSeries {
  std::vector<AggregateRow> rows;
};

/// Union counts across the whole seed list, one row per year from the
/// earliest first-paper year through the horizon. Empty when no seed has
/// any paper.
AggregateSeries aggregate_series(const Corpus& corpus, const SeedList& seeds,
                                 int horizon);

/// Year-over-year differences: the first delta equals the first value, so a
/// cumulative sum reconstructs the input exactly.
/// Throws Error{EmptyInput} on an empty column.
std::vector<long long> accretion(std::span<const long long> cumulative);

}  // namespace snm
