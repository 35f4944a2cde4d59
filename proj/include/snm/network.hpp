#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snm/corpus.hpp"

namespace snm {

using EdgeKey = std::pair<std::string, std::string>;  // lexicographic, first < second

inline EdgeKey make_edge_key(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// Seed-centric co-authorship network: actors double as vertices (the
/// actor/vertex map is a bijection), edge weights count shared papers.
/// Immutable once constructed; queries are pure.
class SocialNetwork {
 public:
  SocialNetwork() = default;

  /// Validates: no self-loops, weights >= 1, endpoints among actors, and
  /// seed membership for non-empty networks. Throws Error{InvalidArgument}.
  SocialNetwork(ActorName seed, int as_of_year, std::set<std::string> actors,
                std::map<EdgeKey, int> edges);

  const ActorName& seed() const { return seed_; }
  int as_of_year() const { return as_of_year_; }
  const std::set<std::string>& actors() const { return actors_; }
  const std::map<EdgeKey, int>& edges() const { return edges_; }

  std::size_t vertex_count() const { return actors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(std::string_view actor) const;
  int edge_weight(std::string_view a, std::string_view b) const;  // 0 if absent

  /// Number of distinct neighbours. Throws Error{UnknownActor} for actors
  /// outside the network.
  int degree(std::string_view actor) const;

 private:
  ActorName seed_;
  int as_of_year_ = 0;
  std::set<std::string> actors_;
  std::map<EdgeKey, int> edges_;
  std::map<std::string, std::set<std::string>> adjacency_;
};

/// Builds the seed's network from its papers up to `up_to_year`: every paper
/// contributes a clique over its authors, each shared paper adding +1 weight.
/// A seed with no papers yields an empty network.
SocialNetwork extract_network(const Corpus& corpus, const ActorName& seed,
                              int up_to_year);

struct AdjacencyMatrix {
  std::vector<std::string> labels;          // sorted actor keys
  std::vector<std::vector<int>> entries;    // symmetric, zero diagonal
};

AdjacencyMatrix adjacency_matrix(const SocialNetwork& sn);

/// Star / complete / reality edge counts and their ratios; ratios are 0
/// whenever the denominator is 0.
struct DensityDiagnostics {
  std::size_t n = 0;
  long long nes = 0;  // star graph edges, n - 1
  long long nec = 0;  // complete graph edges, n (n - 1) / 2
  long long ner = 0;  // observed edges
  double reality_over_complete = 0.0;
  double star_over_complete = 0.0;
  double reality_over_star = 0.0;
};

DensityDiagnostics density_diagnostics(const SocialNetwork& sn);

enum class FirstPaperShape { SingleAuthor, TwoAuthors, MoreThanTwo };

std::string_view to_string(FirstPaperShape shape);

/// Classifies the seed's earliest paper (ties on year broken by record id)
/// by author count. Throws Error{NoPapers} when the seed has none.
FirstPaperShape classify_first_paper(const Corpus& corpus,
                                     const ActorName& seed);

}  // namespace snm
