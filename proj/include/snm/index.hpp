#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "snm/corpus.hpp"

namespace snm {

/// PHRASE: the name tokens must appear contiguously and in order (quoted
/// query). BAG: every token appears somewhere in the document (unquoted).
enum class HitMode { Phrase, Bag };

/// Lowercase alphanumeric runs of the folded text.
std::vector<std::string> tokenize(std::string_view text);

/// Offline occurrence index over the corpus. The indexed document is the
/// record's title followed by its author names, in order; counts are
/// document frequencies, never term frequencies.
class OccurrenceIndex {
 public:
  static OccurrenceIndex build(const Corpus& corpus);

  int hit_count(const ActorName& name, HitMode mode) const;

  /// Distinct records where both names match under `mode`. Symmetric.
  /// Throws Error{InvalidPair} when both keys are equal.
  int cohit_count(const ActorName& a, const ActorName& b, HitMode mode) const;

  /// Sorted record ordinals matching `name` under `mode`.
  std::vector<int> matches(const ActorName& name, HitMode mode) const;

 private:
  std::map<std::string, std::vector<int>> postings_;  // token -> sorted ordinals
  std::vector<std::vector<std::string>> doc_tokens_;
};

}  // namespace snm
