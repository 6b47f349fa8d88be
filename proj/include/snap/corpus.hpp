#pragma once

// Tiered snippet repository: offline tier populated from local directories,
// remote tiers served by SourceClient implementations.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "snap/error.hpp"
#include "snap/matcher.hpp"
#include "snap/tokenizer.hpp"

namespace snap {

enum class RepoTier { OLR = 0, SNAR = 1, OSSNR = 2 };

inline constexpr std::array<RepoTier, 3> kAllTiers{RepoTier::OLR, RepoTier::SNAR, RepoTier::OSSNR};

inline std::string_view to_string(RepoTier tier) {
  switch (tier) {
    case RepoTier::OLR: return "OLR";
    case RepoTier::SNAR: return "SNAR";
    case RepoTier::OSSNR: return "OSSNR";
  }
  return "?";
}

/// Case-insensitive.
inline std::optional<RepoTier> parse_tier(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto tier : kAllTiers) {
    if (to_string(tier) == upper) return tier;
  }
  return std::nullopt;
}

inline std::optional<RepoTier> next_tier(RepoTier tier) {
  if (tier == RepoTier::OSSNR) return std::nullopt;
  return static_cast<RepoTier>(static_cast<int>(tier) + 1);
}

using SnippetMeta = std::map<std::string, std::string>;

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Tier prefix plus a stable content hash, e.g. "olr-9f2c0d1e4a7b3c55".
inline std::string snippet_id_for(RepoTier tier, std::string_view raw_text) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id(to_string(tier));
  for (auto& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  id += '-';
  const auto h = fnv1a64(raw_text);
  for (int shift = 60; shift >= 0; shift -= 4) id += kHex[(h >> shift) & 0xf];
  return id;
}

/// One stored code fragment. The API-call sequence is derived from raw_text
/// at construction and cannot drift from it.
class Snippet {
 public:
  Snippet(std::string id, RepoTier tier, std::string origin, std::string raw_text, SnippetMeta meta = {})
      : id_(std::move(id)),
        tier_(tier),
        origin_(std::move(origin)),
        raw_text_(std::move(raw_text)),
        meta_(std::move(meta)) {
    if (id_.empty()) throw std::invalid_argument("snippet id must be non-empty");
    if (raw_text_.empty()) throw std::invalid_argument("snippet raw_text must be non-empty");
    sequence_ = api_sequence(raw_text_);
  }

  static Snippet from_text(RepoTier tier, std::string origin, std::string raw_text, SnippetMeta meta = {}) {
    auto id = snippet_id_for(tier, raw_text);
    return Snippet(std::move(id), tier, std::move(origin), std::move(raw_text), std::move(meta));
  }

  const std::string& id() const { return id_; }
  RepoTier tier() const { return tier_; }
  const std::string& origin() const { return origin_; }
  const std::string& raw_text() const { return raw_text_; }
  const ApiSequence& sequence() const { return sequence_; }
  const SnippetMeta& meta() const { return meta_; }

  friend bool operator==(const Snippet&, const Snippet&) = default;

 private:
  std::string id_;
  RepoTier tier_;
  std::string origin_;
  std::string raw_text_;
  SnippetMeta meta_;
  ApiSequence sequence_;
};

/// Snippets by id, an inverted index from canonical call symbol to ids, and
/// tier membership. Single writer; immutable once shared.
class CorpusIndex {
 public:
  void add(Snippet snippet) {
    if (snippets_.contains(snippet.id())) throw std::invalid_argument("duplicate snippet id " + snippet.id());
    for (const auto& symbol : snippet.sequence()) {
      auto& ids = postings_[symbol];
      const auto it = std::lower_bound(ids.begin(), ids.end(), snippet.id());
      if (it == ids.end() || *it != snippet.id()) ids.insert(it, snippet.id());
    }
    tier_members_[static_cast<std::size_t>(snippet.tier())].insert(snippet.id());
    const auto id = snippet.id();
    snippets_.emplace(id, std::move(snippet));
  }

  bool contains(std::string_view id) const { return snippets_.find(std::string(id)) != snippets_.end(); }

  const Snippet* find(std::string_view id) const {
    const auto it = snippets_.find(std::string(id));
    return it == snippets_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, Snippet>& snippets() const { return snippets_; }
  const std::map<std::string, std::vector<std::string>>& postings() const { return postings_; }

  const std::vector<std::string>& posting(std::string_view symbol) const {
    static const std::vector<std::string> kEmpty;
    const auto it = postings_.find(std::string(symbol));
    return it == postings_.end() ? kEmpty : it->second;
  }

  const std::set<std::string>& tier_members(RepoTier tier) const {
    return tier_members_[static_cast<std::size_t>(tier)];
  }

  std::size_t size() const { return snippets_.size(); }
  bool empty() const { return snippets_.empty(); }

  friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;

 private:
  std::map<std::string, Snippet> snippets_;
  std::map<std::string, std::vector<std::string>> postings_;
  std::array<std::set<std::string>, 3> tier_members_;
};

// ---------------------------------------------------------------------------
// Ingestion

struct IngestOptions {
  std::set<std::string> extensions{".java", ".js", ".php", ".txt", ".code"};
};

struct IngestReport {
  std::size_t ingested = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<std::string, std::string>> skip_reasons;  // (path, reason)
};

inline bool is_valid_utf8_text(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c == 0) return false;
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

/// Adds one snippet per accepted file under `root` (recursively, in path
/// order). Identical content within a tier maps to the same id; the later
/// file is skipped.
inline IngestReport ingest_directory(CorpusIndex& index, const std::filesystem::path& root, RepoTier tier,
                                     const IngestOptions& options = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("cannot read directory " + root.string());

  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw IoError("cannot read directory " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    std::error_code entry_ec;
    if (entry.is_regular_file(entry_ec)) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  IngestReport report;
  auto skip = [&](const fs::path& p, std::string reason) {
    ++report.skipped;
    report.skip_reasons.emplace_back(p.string(), std::move(reason));
  };
  for (const auto& path : files) {
    if (!options.extensions.contains(path.extension().string())) {
      skip(path, "extension not allowed");
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      skip(path, "unreadable");
      continue;
    }
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
      skip(path, "unreadable");
      continue;
    }
    if (text.empty()) {
      skip(path, "empty file");
      continue;
    }
    if (!is_valid_utf8_text(text)) {
      skip(path, "not UTF-8 text");
      continue;
    }
    auto snippet = Snippet::from_text(tier, fs::relative(path, root, ec).generic_string(), std::move(text));
    if (index.contains(snippet.id())) {
      skip(path, "duplicate content of " + snippet.id());
      continue;
    }
    index.add(std::move(snippet));
    ++report.ingested;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Search

inline bool has_occurrence(const std::optional<PatternMasks>& masks, std::string_view pattern,
                           std::string_view text, std::size_t k) {
  if (masks) return !bpm_search(*masks, text, k).empty();
  return !dp_occurrence_search(pattern, text, k).empty();
}

/// Every snippet of the given tiers with an occurrence of pattern within
/// edit distance k, ordered by (tier, id).
inline std::vector<Snippet> search_raw(const CorpusIndex& index, std::string_view pattern,
                                       const std::set<RepoTier>& tiers, std::size_t k) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::optional<PatternMasks> masks;
  if (pattern.size() <= kWordBits) masks.emplace(pattern);
  std::vector<Snippet> out;
  for (auto tier : tiers) {
    for (const auto& id : index.tier_members(tier)) {
      const Snippet& s = *index.find(id);
      if (has_occurrence(masks, pattern, s.raw_text(), k)) out.push_back(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON records

inline nlohmann::json to_json(const Snippet& s) {
  return {{"id", s.id()}, {"tier", to_string(s.tier())}, {"origin", s.origin()},
          {"raw_text", s.raw_text()}, {"meta", s.meta()}};
}

/// Parses a snippet object. Without an "id" the content id is computed; a
/// forced tier overrides the record's own.
inline Snippet snippet_from_json(const nlohmann::json& j, std::optional<RepoTier> forced_tier = std::nullopt) {
  if (!j.is_object()) throw FormatError("snippet record is not an object");
  const auto text_it = j.find("raw_text");
  if (text_it == j.end() || !text_it->is_string() || text_it->get<std::string>().empty()) {
    throw FormatError("snippet record lacks a non-empty raw_text");
  }
  RepoTier tier = RepoTier::OLR;
  if (forced_tier) {
    tier = *forced_tier;
  } else {
    const auto t = j.find("tier");
    if (t == j.end() || !t->is_string()) throw FormatError("snippet record lacks tier");
    const auto parsed = parse_tier(t->get<std::string>());
    if (!parsed) throw FormatError("unknown tier '" + t->get<std::string>() + "'");
    tier = *parsed;
  }
  SnippetMeta meta;
  if (const auto m = j.find("meta"); m != j.end()) {
    if (!m->is_object()) throw FormatError("snippet meta is not an object");
    for (const auto& [key, value] : m->items()) {
      if (!value.is_string()) throw FormatError("snippet meta value for '" + key + "' is not a string");
      meta.emplace(key, value.get<std::string>());
    }
  }
  std::string origin = j.value("origin", std::string{});
  std::string text = text_it->get<std::string>();
  if (const auto id = j.find("id"); id != j.end()) {
    if (!id->is_string() || id->get<std::string>().empty()) throw FormatError("snippet id is not a string");
    return Snippet(id->get<std::string>(), tier, std::move(origin), std::move(text), std::move(meta));
  }
  return Snippet::from_text(tier, std::move(origin), std::move(text), std::move(meta));
}

// ---------------------------------------------------------------------------
// Persistence: JSON-Lines, header record first.

inline constexpr std::string_view kIndexFormat = "snap-index";
inline constexpr int kIndexVersion = 1;

inline void write_index(const CorpusIndex& index, std::ostream& out) {
  out << nlohmann::json{{"format", kIndexFormat}, {"version", kIndexVersion}, {"count", index.size()}}.dump()
      << '\n';
  for (const auto& [id, snippet] : index.snippets()) out << to_json(snippet).dump() << '\n';
}

inline void save_index(const CorpusIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_index(index, out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

inline CorpusIndex read_index(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> expected;
  CorpusIndex index;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError("record " + std::to_string(line_no) + ": malformed JSON (" + e.what() + ")");
    }
    if (!expected) {
      if (!record.is_object() || record.value("format", std::string{}) != kIndexFormat) {
        throw FormatError("record 1: missing snap-index header");
      }
      if (record.value("version", -1) != kIndexVersion) {
        throw FormatError("record 1: unsupported index version " + record.value("version", nlohmann::json{}).dump());
      }
      const auto count = record.find("count");
      if (count == record.end() || !count->is_number_unsigned()) throw FormatError("record 1: header lacks count");
      expected = count->get<std::size_t>();
      continue;
    }
    try {
      auto snippet = snippet_from_json(record);
      if (!record.contains("id")) throw FormatError("snippet lacks id");
      if (index.contains(snippet.id())) throw FormatError("duplicate snippet id " + snippet.id());
      index.add(std::move(snippet));
    } catch (const FormatError& e) {
      std::string what = "record " + std::to_string(line_no);
      if (record.is_object() && record.contains("id") && record["id"].is_string()) {
        what += " (id " + record["id"].get<std::string>() + ")";
      }
      throw FormatError(what + ": " + e.what());
    }
  }
  if (!expected) throw FormatError("record 1: empty index file");
  if (index.size() != *expected) {
    throw FormatError("truncated index: header declares " + std::to_string(*expected) + " snippets, found " +
                      std::to_string(index.size()));
  }
  return index;
}

inline CorpusIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return read_index(in);
}

/// Header-less corpus file: one snippet object per line.
inline std::vector<Snippet> load_corpus_file(const std::filesystem::path& path,
                                             std::optional<RepoTier> forced_tier = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::vector<Snippet> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(snippet_from_json(nlohmann::json::parse(line), forced_tier));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("record " + std::to_string(line_no) + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError("record " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Remote tiers

struct FetchResult {
  std::vector<Snippet> snippets;
  std::optional<std::string> warning;  // set when the backing store was unreachable
};

/// A remote repository tier. Implementations must tolerate concurrent fetches.
class SourceClient {
 public:
  virtual ~SourceClient() = default;
  virtual RepoTier tier() const = 0;
  virtual FetchResult fetch(std::string_view pattern) const = 0;
};

/// Serves canned responses from a JSON object mapping pattern -> snippets.
/// The file is read once; a missing or invalid file makes every fetch
/// return empty with a warning.
class FixtureSourceClient final : public SourceClient {
 public:
  FixtureSourceClient(RepoTier tier, const std::filesystem::path& path) : tier_(tier) {
    if (tier == RepoTier::OLR) throw std::invalid_argument("fixture clients serve remote tiers only");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      failure_ = std::string(to_string(tier)) + " source unreachable: cannot read " + path.string();
      return;
    }
    try {
      const auto doc = nlohmann::json::parse(in);
      if (!doc.is_object()) throw FormatError("fixture root is not an object");
      for (const auto& [pattern, records] : doc.items()) {
        if (!records.is_array()) throw FormatError("entry '" + pattern + "' is not an array");
        auto& bucket = responses_[pattern];
        for (const auto& record : records) bucket.push_back(snippet_from_json(record, tier));
      }
    } catch (const std::exception& e) {
      responses_.clear();
      failure_ = std::string(to_string(tier)) + " source unreachable: " + path.string() + ": " + e.what();
    }
  }

  RepoTier tier() const override { return tier_; }

  FetchResult fetch(std::string_view pattern) const override {
    if (failure_) return {{}, failure_};
    const auto it = responses_.find(std::string(pattern));
    if (it == responses_.end()) return {};
    return {it->second, std::nullopt};
  }

 private:
  RepoTier tier_;
  std::map<std::string, std::vector<Snippet>> responses_;
  std::optional<std::string> failure_;
};

inline FetchResult fetch_remote(const SourceClient& client, std::string_view pattern) {
  return client.fetch(pattern);
}

}  // namespace snap
