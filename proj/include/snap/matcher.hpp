#pragma once

// Approximate occurrence search under unit-cost edit distance.
//
// bpm_search is Myers' bit-vector algorithm: the DP column over the pattern
// is encoded as vertical +1/-1 delta bit vectors and advanced one text
// character per step with a constant number of word operations. The score
// tracked is the last DP row, i.e. the best distance of the whole pattern
// against any text window ending at the current position.
//
// dp_occurrence_search is the plain O(m*n) table with a zero first row and
// serves as the oracle for the bit-parallel route.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace snap {

struct MatchHit {
  std::size_t end_pos = 0;
  std::size_t distance = 0;

  friend bool operator==(const MatchHit&, const MatchHit&) = default;
};

struct SearchResult {
  std::vector<MatchHit> hits;
  bool fallback = false;  // true when the pattern exceeded the word width
};

inline constexpr std::size_t kWordBits = 64;

/// Per-byte match masks: bit i of masks[c] is set iff pattern[i] == c.
class PatternMasks {
 public:
  explicit PatternMasks(std::string_view pattern) : length_(pattern.size()) {
    if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
    if (pattern.size() > kWordBits) throw std::invalid_argument("pattern longer than machine word");
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      masks_[static_cast<unsigned char>(pattern[i])] |= std::uint64_t{1} << i;
    }
  }

  std::size_t length() const { return length_; }
  std::uint64_t operator[](unsigned char c) const { return masks_[c]; }

 private:
  std::size_t length_;
  std::array<std::uint64_t, 256> masks_{};
};

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline std::vector<MatchHit> dp_occurrence_search(std::string_view pattern, std::string_view text, std::size_t k) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  const std::size_t m = pattern.size();
  std::vector<std::size_t> col(m + 1);
  for (std::size_t i = 0; i <= m; ++i) col[i] = i;
  std::vector<MatchHit> hits;
  for (std::size_t j = 0; j < text.size(); ++j) {
    std::size_t diag = col[0];  // first row stays zero: a window may start anywhere
    for (std::size_t i = 1; i <= m; ++i) {
      const std::size_t left = col[i];
      col[i] = std::min({left + 1, col[i - 1] + 1, diag + (pattern[i - 1] == text[j] ? 0 : 1)});
      diag = left;
    }
    if (col[m] <= k) hits.push_back({j, col[m]});
  }
  return hits;
}

inline std::vector<MatchHit> bpm_search(const PatternMasks& masks, std::string_view text, std::size_t k) {
  const std::size_t m = masks.length();
  const std::uint64_t high = std::uint64_t{1} << (m - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t score = m;
  std::vector<MatchHit> hits;
  for (std::size_t j = 0; j < text.size(); ++j) {
    const std::uint64_t eq = masks[static_cast<unsigned char>(text[j])];
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    if (ph & high) {
      ++score;
    } else if (mh & high) {
      --score;
    }
    // No carry-in at the top row: the horizontal delta there is always zero.
    ph <<= 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
    if (score <= k) hits.push_back({j, score});
  }
  return hits;
}

/// Semi-global search reporting one hit per end position with distance <= k.
/// Patterns wider than a machine word are answered by the DP table.
inline SearchResult bpm_search(std::string_view pattern, std::string_view text, std::size_t k) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  if (pattern.size() > kWordBits) return {dp_occurrence_search(pattern, text, k), true};
  return {bpm_search(PatternMasks(pattern), text, k), false};
}

/// Lowest distance, then earliest end position.
inline const MatchHit* best_hit(const std::vector<MatchHit>& hits) {
  const MatchHit* best = nullptr;
  for (const auto& hit : hits) {
    if (!best || hit.distance < best->distance) best = &hit;
  }
  return best;
}

}  // namespace snap
