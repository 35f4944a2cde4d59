#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snm {

/// Lowercases ASCII, folds Latin-1 / Latin Extended-A diacritics to ASCII and
/// maps every whitespace codepoint to ' '. Other codepoints pass through.
std::string fold_text(std::string_view raw);

/// Canonical identity token for an actor name: fold_text plus whitespace
/// collapsing and trimming. Deterministic and idempotent.
/// Throws Error{InvalidName} for input that is empty after trimming.
std::string normalize_name(std::string_view raw);

struct ActorName {
  std::string raw;  // as it appears in the source
  std::string key;  // normalize_name(raw)

  friend bool operator==(const ActorName&, const ActorName&) = default;
};

ActorName make_actor(std::string raw);

struct PaperRecord {
  std::string id;
  int year = 0;
  std::string title;
  std::vector<ActorName> authors;  // non-empty, keys unique within the record

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// Immutable bibliographic corpus. Once built it is safe for concurrent
/// reads from any module.
class Corpus {
 public:
  /// Reads UTF-8 JSONL, one record per non-blank line:
  ///   {"id": "...", "year": 2005, "title": "...", "authors": ["...", ...]}
  /// `title` is optional. Errors carry the offending line number.
  static Corpus parse_jsonl(std::istream& in);

  const std::vector<PaperRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }

  // Both are 0 for an empty corpus.
  int year_min() const { return year_min_; }
  int year_max() const { return year_max_; }

  /// key -> first ActorName seen with that key.
  const std::map<std::string, ActorName>& registry() const { return registry_; }

  /// All records authored by `key`, optionally restricted to
  /// year <= up_to_year, sorted ascending by (year, id). Unknown keys give
  /// an empty result.
  std::vector<const PaperRecord*> papers_of(
      std::string_view key, std::optional<int> up_to_year = {}) const;

  void write_jsonl(std::ostream& out) const;

  friend bool operator==(const Corpus&, const Corpus&);

 private:
  std::vector<PaperRecord> records_;
  int year_min_ = 0;
  int year_max_ = 0;
  std::map<std::string, ActorName> registry_;
  // key -> record indices sorted by (year, id)
  std::unordered_map<std::string, std::vector<std::size_t>> by_author_;
};

enum class SeedCategory { Pr, Ap, Other };

std::string_view to_string(SeedCategory c);

struct SeedEntry {
  ActorName name;
  SeedCategory category = SeedCategory::Other;
};

/// Ordered seed roster. File format: one `name<TAB>category` entry per line,
/// category in {pr, ap} and optional. Line order is preserved; it drives the
/// runs tests downstream.
struct SeedList {
  std::vector<SeedEntry> entries;

  static SeedList parse(std::istream& in);
};

}  // namespace snm
