#include "snm/timeline.hpp"

#include <algorithm>
#include <set>

#include "snm/errors.hpp"
#include "snm/network.hpp"

namespace snm {

GrowthSeries growth_series(const Corpus& corpus, const ActorName& seed,
                           int horizon) {
  GrowthSeries series{seed, {}};
  auto papers = corpus.papers_of(seed.key);
  if (papers.empty()) return series;
  int first_year = papers.front()->year;
  if (horizon < first_year) return series;

  std::size_t paper_idx = 0;
  int papers_so_far = 0;
  for (int year = first_year; year <= horizon; ++year) {
    while (paper_idx < papers.size() && papers[paper_idx]->year <= year) {
      ++paper_idx;
      ++papers_so_far;
    }
    SocialNetwork net = extract_network(corpus, seed, year);
    series.rows.push_back(GrowthRow{year, papers_so_far,
                                    static_cast<int>(net.vertex_count()),
                                    static_cast<int>(net.edge_count())});
  }
  return series;
}

AggregateSeries aggregate_series(const Corpus& corpus, const SeedList& seeds,
                                 int horizon) {
  AggregateSeries series;
  int first_year = 0;
  bool any = false;
  for (const SeedEntry& entry : seeds.entries) {
    auto papers = corpus.papers_of(entry.name.key);
    if (papers.empty()) continue;
    int y = papers.front()->year;
    first_year = any ? std::min(first_year, y) : y;
    any = true;
  }
  if (!any || horizon < first_year) return series;

  for (int year = first_year; year <= horizon; ++year) {
    AggregateRow row;
    row.year = year;
    std::set<std::string> paper_ids;
    std::set<std::string> vertices;
    std::set<EdgeKey> edges;
    for (const SeedEntry& entry : seeds.entries) {
      auto papers = corpus.papers_of(entry.name.key, year);
      if (papers.empty()) continue;
      ++row.seeds;
      for (const PaperRecord* p : papers) paper_ids.insert(p->id);
      SocialNetwork net = extract_network(corpus, entry.name, year);
      vertices.insert(net.actors().begin(), net.actors().end());
      for (const auto& [key, weight] : net.edges()) edges.insert(key);
    }
    row.papers = static_cast<int>(paper_ids.size());
    row.vertices = static_cast<int>(vertices.size());
    row.edges = static_cast<int>(edges.size());
    series.rows.push_back(row);
  }
  return series;
}

std::vector<long long> accretion(std::span<const long long> cumulative) {
  if (cumulative.empty()) {
    throw Error(Error::Kind::EmptyInput, "accretion of an empty series");
  }
  std::vector<long long> deltas;
  deltas.reserve(cumulative.size());
  deltas.push_back(cumulative[0]);
  for (std::size_t i = 1; i < cumulative.size(); ++i) {
    deltas.push_back(cumulative[i] - cumulative[i - 1]);
  }
  return deltas;
}

}  // namespace snm
