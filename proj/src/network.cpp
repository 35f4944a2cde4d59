#include "snm/network.hpp"

#include <algorithm>

#include "snm/errors.hpp"

namespace snm {

SocialNetwork::SocialNetwork(ActorName seed, int as_of_year,
                             std::set<std::string> actors,
                             std::map<EdgeKey, int> edges)
    : seed_(std::move(seed)),
      as_of_year_(as_of_year),
      actors_(std::move(actors)),
      edges_(std::move(edges)) {
  if (!actors_.empty() && !actors_.contains(seed_.key)) {
    throw Error(Error::Kind::InvalidArgument,
                "seed '" + seed_.key + "' is not among the network's actors");
  }
  for (const auto& [key, weight] : edges_) {
    if (key.first == key.second) {
      throw Error(Error::Kind::InvalidArgument,
                  "self-loop on '" + key.first + "'");
    }
    if (key.second < key.first) {
      throw Error(Error::Kind::InvalidArgument, "edge key out of order");
    }
    if (weight < 1) {
      throw Error(Error::Kind::InvalidArgument, "edge weight below 1");
    }
    if (!actors_.contains(key.first) || !actors_.contains(key.second)) {
      throw Error(Error::Kind::InvalidArgument,
                  "edge endpoint outside the actor set");
    }
    adjacency_[key.first].insert(key.second);
    adjacency_[key.second].insert(key.first);
  }
}

bool SocialNetwork::contains(std::string_view actor) const {
  return actors_.contains(std::string(actor));
}

int SocialNetwork::edge_weight(std::string_view a, std::string_view b) const {
  auto it = edges_.find(make_edge_key(std::string(a), std::string(b)));
  return it == edges_.end() ? 0 : it->second;
}

int SocialNetwork::degree(std::string_view actor) const {
  std::string key(actor);
  if (!actors_.contains(key)) {
    throw Error(Error::Kind::UnknownActor, "actor '" + key + "' not in network");
  }
  auto it = adjacency_.find(key);
  return it == adjacency_.end() ? 0 : static_cast<int>(it->second.size());
}

SocialNetwork extract_network(const Corpus& corpus, const ActorName& seed,
                              int up_to_year) {
  std::set<std::string> actors;
  std::map<EdgeKey, int> edges;
  for (const PaperRecord* paper : corpus.papers_of(seed.key, up_to_year)) {
    std::vector<std::string> keys;
    keys.reserve(paper->authors.size());
    for (const ActorName& a : paper->authors) keys.push_back(a.key);
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      actors.insert(keys[i]);
      for (std::size_t j = i + 1; j < keys.size(); ++j) {
        ++edges[{keys[i], keys[j]}];
      }
    }
  }
  return SocialNetwork(seed, up_to_year, std::move(actors), std::move(edges));
}

AdjacencyMatrix adjacency_matrix(const SocialNetwork& sn) {
  AdjacencyMatrix m;
  m.labels.assign(sn.actors().begin(), sn.actors().end());
  std::size_t n = m.labels.size();
  m.entries.assign(n, std::vector<int>(n, 0));
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position[m.labels[i]] = i;
  for (const auto& [key, weight] : sn.edges()) {
    std::size_t a = position.at(key.first);
    std::size_t b = position.at(key.second);
    m.entries[a][b] = weight;
    m.entries[b][a] = weight;
  }
  return m;
}

DensityDiagnostics density_diagnostics(const SocialNetwork& sn) {
  DensityDiagnostics d;
  d.n = sn.vertex_count();
  auto n = static_cast<long long>(d.n);
  d.nes = n >= 2 ? n - 1 : 0;
  d.nec = n >= 2 ? n * (n - 1) / 2 : 0;
  d.ner = static_cast<long long>(sn.edge_count());
  if (d.nec > 0) {
    d.reality_over_complete = static_cast<double>(d.ner) / static_cast<double>(d.nec);
    d.star_over_complete = static_cast<double>(d.nes) / static_cast<double>(d.nec);
  }
  if (d.nes > 0) {
    d.reality_over_star = static_cast<double>(d.ner) / static_cast<double>(d.nes);
  }
  return d;
}

std::string_view to_string(FirstPaperShape shape) {
  switch (shape) {
    case FirstPaperShape::SingleAuthor:
      return "single_author";
    case FirstPaperShape::TwoAuthors:
      return "two_authors";
    case FirstPaperShape::MoreThanTwo:
      return "more_than_two";
  }
  return "more_than_two";
}

FirstPaperShape classify_first_paper(const Corpus& corpus,
                                     const ActorName& seed) {
  auto papers = corpus.papers_of(seed.key);
  if (papers.empty()) {
    throw Error(Error::Kind::NoPapers,
                "seed '" + seed.key + "' has no papers");
  }
  std::size_t authors = papers.front()->authors.size();
  if (authors == 1) return FirstPaperShape::SingleAuthor;
  if (authors == 2) return FirstPaperShape::TwoAuthors;
  return FirstPaperShape::MoreThanTwo;
}

}  // namespace snm
