#include "snm/index.hpp"

#include <algorithm>

#include "snm/errors.hpp"

namespace snm {

std::vector<std::string> tokenize(std::string_view text) {
  std::string folded = fold_text(text);
  std::vector<std::string> tokens;
  std::string current;
  for (char c : folded) {
    bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

OccurrenceIndex OccurrenceIndex::build(const Corpus& corpus) {
  OccurrenceIndex index;
  index.doc_tokens_.reserve(corpus.size());
  for (const PaperRecord& rec : corpus.records()) {
    std::vector<std::string> tokens = tokenize(rec.title);
    for (const ActorName& author : rec.authors) {
      for (std::string& t : tokenize(author.raw)) tokens.push_back(std::move(t));
    }
    int ordinal = static_cast<int>(index.doc_tokens_.size());
    for (const std::string& t : tokens) {
      auto& posting = index.postings_[t];
      if (posting.empty() || posting.back() != ordinal) posting.push_back(ordinal);
    }
    index.doc_tokens_.push_back(std::move(tokens));
  }
  return index;
}

std::vector<int> OccurrenceIndex::matches(const ActorName& name,
                                          HitMode mode) const {
  std::vector<std::string> query = tokenize(name.raw);
  if (query.empty()) return {};

  // Conjunctive containment via posting intersection; this is the BAG result.
  std::vector<int> docs;
  for (std::size_t i = 0; i < query.size(); ++i) {
    auto it = postings_.find(query[i]);
    if (it == postings_.end()) return {};
    if (i == 0) {
      docs = it->second;
    } else {
      std::vector<int> next;
      std::set_intersection(docs.begin(), docs.end(), it->second.begin(),
                            it->second.end(), std::back_inserter(next));
      docs = std::move(next);
    }
    if (docs.empty()) return {};
  }
  if (mode == HitMode::Bag) return docs;

  std::vector<int> phrase_docs;
  for (int doc : docs) {
    const auto& tokens = doc_tokens_[doc];
    if (std::search(tokens.begin(), tokens.end(), query.begin(), query.end()) !=
        tokens.end()) {
      phrase_docs.push_back(doc);
    }
  }
  return phrase_docs;
}

int OccurrenceIndex::hit_count(const ActorName& name, HitMode mode) const {
  return static_cast<int>(matches(name, mode).size());
}

int OccurrenceIndex::cohit_count(const ActorName& a, const ActorName& b,
                                 HitMode mode) const {
  if (a.key == b.key) {
    throw Error(Error::Kind::InvalidPair,
                "co-hit of an actor with itself: '" + a.key + "'");
  }
  std::vector<int> ma = matches(a, mode);
  std::vector<int> mb = matches(b, mode);
  std::vector<int> both;
  std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                        std::back_inserter(both));
  return static_cast<int>(both.size());
}

}  // namespace snm
