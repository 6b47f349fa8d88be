#pragma once

// Raw sources -> similar sources: exact dedup on normalized bodies, then
// positional pre/post context checks around a verified pattern anchor.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snap/corpus.hpp"
#include "snap/matcher.hpp"

namespace snap {

struct ContextQuery {
  std::string pattern;
  std::optional<std::string> pre;
  std::optional<std::string> post;
  std::size_t k_pattern = 1;
  std::size_t k_context = 2;
  std::size_t window = 120;

  void validate() const {
    if (pattern.empty()) throw std::invalid_argument("query pattern must be non-empty");
    if (pre && pre->empty()) throw std::invalid_argument("pre context must be non-empty when present");
    if (post && post->empty()) throw std::invalid_argument("post context must be non-empty when present");
    if (pre && window < pre->size()) throw std::invalid_argument("window smaller than pre context");
    if (post && window < post->size()) throw std::invalid_argument("window smaller than post context");
  }

  friend bool operator==(const ContextQuery&, const ContextQuery&) = default;
};

struct FilteredSnippet {
  Snippet snippet;
  MatchHit anchor;
  std::optional<MatchHit> pre_hit;   // positions are absolute in raw_text
  std::optional<MatchHit> post_hit;
};

/// Comments removed, whitespace runs collapsed to one space, trimmed.
/// Literal contents are kept verbatim.
inline std::string normalize_body(std::string_view text) {
  std::string out;
  bool pending_space = false;
  auto emit = [&](char c) {
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  };
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      ++i;
    } else if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      pending_space = true;
    } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      const auto close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? n : close + 2;
      pending_space = true;
    } else if (c == '"' || c == '\'' || c == '`') {
      emit(c);
      ++i;
      while (i < n && text[i] != c) {
        if (text[i] == '\\' && i + 1 < n) out += text[i++];
        out += text[i++];
      }
      if (i < n) out += text[i++];
    } else {
      emit(c);
      ++i;
    }
  }
  return out;
}

/// Keeps the smallest-id representative of each normalized body, in input order.
inline std::vector<Snippet> dedupe(const std::vector<Snippet>& snippets) {
  std::map<std::string, std::string> representative;  // body -> smallest id
  std::vector<std::string> bodies;
  bodies.reserve(snippets.size());
  for (const auto& s : snippets) {
    bodies.push_back(normalize_body(s.raw_text()));
    auto [it, inserted] = representative.try_emplace(bodies.back(), s.id());
    if (!inserted && s.id() < it->second) it->second = s.id();
  }
  std::vector<Snippet> out;
  for (std::size_t i = 0; i < snippets.size(); ++i) {
    auto it = representative.find(bodies[i]);
    if (it != representative.end() && it->second == snippets[i].id()) {
      out.push_back(snippets[i]);
      representative.erase(it);  // an id listed twice survives once
    }
  }
  return out;
}

namespace detail {

// Best hit of `needle` inside text[from, to), in absolute coordinates.
// `prefer_late` breaks distance ties toward the region's end.
inline std::optional<MatchHit> context_hit(std::string_view needle, std::string_view text, std::size_t from,
                                           std::size_t to, std::size_t k, bool prefer_late) {
  if (from >= to) return std::nullopt;
  const auto hits = bpm_search(needle, text.substr(from, to - from), k).hits;
  std::optional<MatchHit> best;
  for (const auto& h : hits) {
    if (!best || h.distance < best->distance || (prefer_late && h.distance == best->distance)) best = h;
  }
  if (best) best->end_pos += from;
  return best;
}

}  // namespace detail

/// Anchors each snippet at its best pattern hit and applies the optional
/// pre/post checks inside `window` characters on either side. Output is
/// ordered by (anchor distance, id).
inline std::vector<FilteredSnippet> context_filter(const std::vector<Snippet>& snippets, const ContextQuery& q) {
  q.validate();
  std::vector<FilteredSnippet> out;
  std::optional<PatternMasks> masks;
  if (q.pattern.size() <= kWordBits) masks.emplace(q.pattern);
  for (const auto& s : snippets) {
    const std::string_view text = s.raw_text();
    const auto hits = masks ? bpm_search(*masks, text, q.k_pattern) : dp_occurrence_search(q.pattern, text, q.k_pattern);
    const MatchHit* anchor = best_hit(hits);
    if (!anchor) continue;

    // Window start under edits is ambiguous; end - |pattern| + 1 is off by at most k.
    const std::size_t anchor_start = anchor->end_pos + 1 >= q.pattern.size() ? anchor->end_pos + 1 - q.pattern.size() : 0;
    FilteredSnippet kept{s, *anchor, std::nullopt, std::nullopt};
    if (q.pre) {
      const std::size_t from = anchor_start > q.window ? anchor_start - q.window : 0;
      kept.pre_hit = detail::context_hit(*q.pre, text, from, anchor_start, q.k_context, true);
      if (!kept.pre_hit) continue;
    }
    if (q.post) {
      const std::size_t from = anchor->end_pos + 1;
      const std::size_t to = std::min(text.size(), from + q.window);
      kept.post_hit = detail::context_hit(*q.post, text, from, to, q.k_context, false);
      if (!kept.post_hit) continue;
    }
    out.push_back(std::move(kept));
  }
  std::stable_sort(out.begin(), out.end(), [](const FilteredSnippet& a, const FilteredSnippet& b) {
    if (a.anchor.distance != b.anchor.distance) return a.anchor.distance < b.anchor.distance;
    return a.snippet.id() < b.snippet.id();
  });
  return out;
}

}  // namespace snap
