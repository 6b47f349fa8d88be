#pragma once

// Frequent sequential pattern mining over API-call sequences.
//
// Elements are single call symbols, so a sequence is a plain string list and
// the projected database of a prefix is the set of suffixes following the
// first occurrence of its last symbol. Support counts sequences, not
// embeddings.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace snap {

struct SequenceRecord {
  std::string id;
  std::vector<std::string> symbols;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

using SequenceDB = std::vector<SequenceRecord>;

struct FrequentPattern {
  std::vector<std::string> symbols;
  std::size_t support = 0;
  std::vector<std::string> support_ids;  // sorted ascending

  friend bool operator==(const FrequentPattern&, const FrequentPattern&) = default;
};

/// Suffix after the first occurrence of `symbol`, for each sequence that has one.
inline SequenceDB project(const SequenceDB& db, const std::string& symbol) {
  SequenceDB out;
  for (const auto& rec : db) {
    const auto it = std::find(rec.symbols.begin(), rec.symbols.end(), symbol);
    if (it == rec.symbols.end()) continue;
    out.push_back({rec.id, std::vector<std::string>(it + 1, rec.symbols.end())});
  }
  return out;
}

inline bool is_subsequence(const std::vector<std::string>& pattern, const std::vector<std::string>& sequence) {
  std::size_t matched = 0;
  for (const auto& s : sequence) {
    if (matched < pattern.size() && s == pattern[matched]) ++matched;
  }
  return matched == pattern.size();
}

namespace detail {

// Pseudo-projection: (record index, start offset) pairs into the source db.
struct Projection {
  std::size_t record;
  std::size_t start;
};

inline void grow(const SequenceDB& db, const std::vector<Projection>& projected, std::vector<std::string>& prefix,
                 std::size_t min_support, std::vector<FrequentPattern>& out) {
  // symbol -> indices into `projected` whose suffix contains it
  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (std::size_t p = 0; p < projected.size(); ++p) {
    const auto& seq = db[projected[p].record].symbols;
    std::set<std::string> seen;
    for (std::size_t i = projected[p].start; i < seq.size(); ++i) {
      if (seen.insert(seq[i]).second) occurrences[seq[i]].push_back(p);
    }
  }
  for (const auto& [symbol, members] : occurrences) {
    if (members.size() < min_support) continue;
    std::vector<Projection> next;
    FrequentPattern pattern;
    prefix.push_back(symbol);
    pattern.symbols = prefix;
    pattern.support = members.size();
    for (auto p : members) {
      const auto& proj = projected[p];
      const auto& seq = db[proj.record].symbols;
      const auto first = std::find(seq.begin() + static_cast<std::ptrdiff_t>(proj.start), seq.end(), symbol);
      next.push_back({proj.record, static_cast<std::size_t>(first - seq.begin()) + 1});
      pattern.support_ids.push_back(db[proj.record].id);
    }
    std::sort(pattern.support_ids.begin(), pattern.support_ids.end());
    out.push_back(std::move(pattern));
    grow(db, next, prefix, min_support, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Support descending, then length descending, then symbols ascending.
inline bool rank_before(const FrequentPattern& a, const FrequentPattern& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.symbols.size() != b.symbols.size()) return a.symbols.size() > b.symbols.size();
  return a.symbols < b.symbols;
}

inline std::vector<FrequentPattern> rank(std::vector<FrequentPattern> patterns) {
  std::stable_sort(patterns.begin(), patterns.end(), rank_before);
  return patterns;
}

/// All non-empty patterns with support >= min_support, ranked.
inline std::vector<FrequentPattern> prefixspan(const SequenceDB& db, std::size_t min_support) {
  if (min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  std::vector<detail::Projection> all;
  for (std::size_t i = 0; i < db.size(); ++i) all.push_back({i, 0});
  std::vector<FrequentPattern> out;
  std::vector<std::string> prefix;
  detail::grow(db, all, prefix, min_support, out);
  return rank(std::move(out));
}

/// Reference enumerator for small inputs: every distinct subsequence up to
/// max_len, supports counted by direct containment tests.
inline std::vector<FrequentPattern> brute_force_patterns(const SequenceDB& db, std::size_t min_support,
                                                         std::size_t max_len) {
  std::set<std::vector<std::string>> candidates;
  for (const auto& rec : db) {
    const std::size_t n = rec.symbols.size();
    if (n >= 8 * sizeof(unsigned long long)) throw std::invalid_argument("sequence too long for enumeration");
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
      std::vector<std::string> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ULL << i)) sub.push_back(rec.symbols[i]);
      }
      if (sub.size() <= max_len) candidates.insert(std::move(sub));
    }
  }
  std::vector<FrequentPattern> out;
  for (const auto& candidate : candidates) {
    FrequentPattern p;
    p.symbols = candidate;
    for (const auto& rec : db) {
      if (is_subsequence(candidate, rec.symbols)) p.support_ids.push_back(rec.id);
    }
    p.support = p.support_ids.size();
    std::sort(p.support_ids.begin(), p.support_ids.end());
    if (p.support >= min_support) out.push_back(std::move(p));
  }
  return rank(std::move(out));
}

/// max(2, ceil(0.1 * |db|)).
inline std::size_t default_min_support(std::size_t db_size) {
  return std::max<std::size_t>(2, (db_size + 9) / 10);
}

}  // namespace snap
