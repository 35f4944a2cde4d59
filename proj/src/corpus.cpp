#include "snm/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "snm/errors.hpp"

namespace snm {

namespace {

// Maps one codepoint from the Latin-1 Supplement / Latin Extended-A blocks
// to an ASCII replacement, or nullptr when the codepoint is not a letter
// with a diacritic we fold.
const char* fold_latin(char32_t cp) {
  if (cp >= 0x00C0 && cp <= 0x00FF) {
    static const char* table[] = {
        // 0x00C0 - 0x00DF
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i",
        "i", "i", "d", "n", "o", "o", "o", "o", "o", nullptr, "o", "u", "u",
        "u", "u", "y", "th", "ss",
        // 0x00E0 - 0x00FF
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i",
        "i", "i", "d", "n", "o", "o", "o", "o", "o", nullptr, "o", "u", "u",
        "u", "u", "y", "th", "y"};
    return table[cp - 0x00C0];
  }
  if (cp >= 0x0100 && cp <= 0x017F) {
    struct Range {
      char32_t last;
      const char* base;
    };
    // Contiguous runs of the Extended-A block sharing one base letter.
    static const Range ranges[] = {
        {0x0105, "a"}, {0x010D, "c"}, {0x0111, "d"},  {0x011B, "e"},
        {0x0123, "g"}, {0x0127, "h"}, {0x0131, "i"},  {0x0133, "ij"},
        {0x0135, "j"}, {0x0138, "k"}, {0x0142, "l"},  {0x014B, "n"},
        {0x0151, "o"}, {0x0153, "oe"}, {0x0159, "r"}, {0x0161, "s"},
        {0x0167, "t"}, {0x0173, "u"}, {0x0175, "w"},  {0x0178, "y"},
        {0x017E, "z"}, {0x017F, "s"}};
    for (const auto& r : ranges) {
      if (cp <= r.last) return r.base;
    }
  }
  return nullptr;
}

bool is_space_cp(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\r' || cp == '\n' || cp == '\f' ||
         cp == '\v' || cp == 0x00A0;
}

// Decodes the UTF-8 sequence starting at `i`; on malformed input the single
// byte is passed through as-is so normalization stays deterministic.
char32_t next_codepoint(std::string_view s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + len > s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

void append_codepoint_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string fold_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    char32_t cp = next_codepoint(raw, i);
    if (is_space_cp(cp)) {
      out.push_back(' ');
    } else if (cp >= 'A' && cp <= 'Z') {
      out.push_back(static_cast<char>(cp - 'A' + 'a'));
    } else if (const char* rep = fold_latin(cp)) {
      out += rep;
    } else {
      append_codepoint_utf8(out, cp);
    }
  }
  return out;
}

std::string normalize_name(std::string_view raw) {
  std::string folded = fold_text(raw);
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (char c : folded) {
    if (c == ' ') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  if (out.empty()) {
    throw Error(Error::Kind::InvalidName, "empty or whitespace-only name");
  }
  return out;
}

ActorName make_actor(std::string raw) {
  std::string key = normalize_name(raw);
  return ActorName{std::move(raw), std::move(key)};
}

namespace {

[[noreturn]] void parse_fail(Error::Kind kind, std::size_t line_no,
                             const std::string& what) {
  throw Error(kind, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Corpus Corpus::parse_jsonl(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      parse_fail(Error::Kind::Parse, line_no, "not a JSON object");
    }
    if (!j.contains("id") || !j["id"].is_string()) {
      parse_fail(Error::Kind::Parse, line_no, "missing string field 'id'");
    }
    if (!j.contains("year") || !j["year"].is_number_integer()) {
      parse_fail(Error::Kind::InvalidRecord, line_no,
                 "missing integer field 'year'");
    }
    if (!j.contains("authors") || !j["authors"].is_array()) {
      parse_fail(Error::Kind::Parse, line_no, "missing array field 'authors'");
    }

    PaperRecord rec;
    rec.id = j["id"].get<std::string>();
    rec.year = j["year"].get<int>();
    if (j.contains("title")) {
      if (!j["title"].is_string()) {
        parse_fail(Error::Kind::Parse, line_no, "'title' must be a string");
      }
      rec.title = j["title"].get<std::string>();
    }
    if (rec.id.empty()) {
      parse_fail(Error::Kind::InvalidRecord, line_no, "empty record id");
    }
    if (j["authors"].empty()) {
      parse_fail(Error::Kind::InvalidRecord, line_no, "record has no authors");
    }
    std::unordered_set<std::string> keys_in_record;
    for (const auto& a : j["authors"]) {
      if (!a.is_string()) {
        parse_fail(Error::Kind::Parse, line_no, "author entries must be strings");
      }
      ActorName actor;
      try {
        actor = make_actor(a.get<std::string>());
      } catch (const Error&) {
        parse_fail(Error::Kind::InvalidRecord, line_no, "blank author name");
      }
      if (!keys_in_record.insert(actor.key).second) {
        parse_fail(Error::Kind::InvalidRecord, line_no,
                   "duplicate author '" + actor.key + "' in one record");
      }
      rec.authors.push_back(std::move(actor));
    }
    if (!seen_ids.insert(rec.id).second) {
      parse_fail(Error::Kind::DuplicateRecord, line_no,
                 "duplicate record id '" + rec.id + "'");
    }
    corpus.records_.push_back(std::move(rec));
  }

  for (std::size_t i = 0; i < corpus.records_.size(); ++i) {
    const PaperRecord& rec = corpus.records_[i];
    if (i == 0) {
      corpus.year_min_ = corpus.year_max_ = rec.year;
    } else {
      corpus.year_min_ = std::min(corpus.year_min_, rec.year);
      corpus.year_max_ = std::max(corpus.year_max_, rec.year);
    }
    for (const ActorName& a : rec.authors) {
      corpus.registry_.emplace(a.key, a);
      corpus.by_author_[a.key].push_back(i);
    }
  }
  for (auto& [key, idxs] : corpus.by_author_) {
    std::sort(idxs.begin(), idxs.end(), [&](std::size_t l, std::size_t r) {
      const PaperRecord& a = corpus.records_[l];
      const PaperRecord& b = corpus.records_[r];
      return std::tie(a.year, a.id) < std::tie(b.year, b.id);
    });
  }
  return corpus;
}

std::vector<const PaperRecord*> Corpus::papers_of(
    std::string_view key, std::optional<int> up_to_year) const {
  std::vector<const PaperRecord*> out;
  auto it = by_author_.find(std::string(key));
  if (it == by_author_.end()) return out;
  for (std::size_t idx : it->second) {
    const PaperRecord& rec = records_[idx];
    if (up_to_year && rec.year > *up_to_year) continue;
    out.push_back(&rec);
  }
  return out;
}

void Corpus::write_jsonl(std::ostream& out) const {
  for (const PaperRecord& rec : records_) {
    nlohmann::json j;
    j["id"] = rec.id;
    j["year"] = rec.year;
    j["title"] = rec.title;
    nlohmann::json authors = nlohmann::json::array();
    for (const ActorName& a : rec.authors) authors.push_back(a.raw);
    j["authors"] = std::move(authors);
    out << j.dump() << '\n';
  }
}

bool operator==(const Corpus& a, const Corpus& b) {
  return a.records_ == b.records_;
}

std::string_view to_string(SeedCategory c) {
  switch (c) {
    case SeedCategory::Pr:
      return "pr";
    case SeedCategory::Ap:
      return "ap";
    case SeedCategory::Other:
      return "other";
  }
  return "other";
}

SeedList SeedList::parse(std::istream& in) {
  SeedList seeds;
  std::unordered_set<std::string> keys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::string name_part = line;
    SeedCategory category = SeedCategory::Other;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      name_part = line.substr(0, tab);
      std::string cat = line.substr(tab + 1);
      if (cat.find('\t') != std::string::npos) {
        parse_fail(Error::Kind::Parse, line_no, "too many fields");
      }
      if (cat == "pr") {
        category = SeedCategory::Pr;
      } else if (cat == "ap") {
        category = SeedCategory::Ap;
      } else if (cat.empty()) {
        category = SeedCategory::Other;
      } else {
        parse_fail(Error::Kind::Parse, line_no,
                   "unknown category '" + cat + "' (expected pr or ap)");
      }
    }
    ActorName actor;
    try {
      actor = make_actor(name_part);
    } catch (const Error&) {
      parse_fail(Error::Kind::InvalidName, line_no, "blank seed name");
    }
    if (!keys.insert(actor.key).second) {
      parse_fail(Error::Kind::DuplicateRecord, line_no,
                 "duplicate seed '" + actor.key + "'");
    }
    seeds.entries.push_back(SeedEntry{std::move(actor), category});
  }
  return seeds;
}

}  // namespace snm
