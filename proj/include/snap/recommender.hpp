#pragma once

// End-to-end recommendation: tiered search -> dedupe -> context filter ->
// call sequences -> PrefixSpan -> rank -> top-k -> code skeletons, with
// reject-driven escalation across repository tiers.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snap/corpus.hpp"
#include "snap/error.hpp"
#include "snap/filter.hpp"
#include "snap/miner.hpp"
#include "snap/tokenizer.hpp"

namespace snap {

struct Recommendation {
  std::string id;
  FrequentPattern pattern;
  std::string skeleton_text;
  std::vector<std::string> exemplar_ids;
  double score = 0.0;  // support / filtered-set size, display only

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

struct PipelineTrace {
  std::size_t raw = 0;
  std::size_t deduped = 0;
  std::size_t filtered = 0;
  std::size_t sequences = 0;
  std::size_t patterns = 0;
  std::size_t recommended = 0;
  RepoTier tier = RepoTier::OLR;
  std::vector<std::string> warnings;

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

enum class SessionStatus { active, closed, exhausted };

inline std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::active: return "active";
    case SessionStatus::closed: return "closed";
    case SessionStatus::exhausted: return "exhausted";
  }
  return "?";
}

struct Session {
  std::string id;
  ContextQuery query;
  RepoTier current_tier = RepoTier::OLR;
  SessionStatus status = SessionStatus::active;
  std::vector<PipelineTrace> trace_history;

  bool exhausted() const { return status == SessionStatus::exhausted; }
  bool closed() const { return status == SessionStatus::closed; }
};

enum class Verdict { accept, reject };

using SourceClients = std::vector<std::shared_ptr<const SourceClient>>;

struct PipelineOptions {
  std::size_t top_k = 10;
  std::optional<std::size_t> min_support;  // default_min_support(filtered) when unset
};

struct PipelineResult {
  std::vector<Recommendation> recommendations;
  PipelineTrace trace;
  std::vector<Snippet> remote_snippets;  // fetched from remote tiers in this run
};

// ---------------------------------------------------------------------------
// Skeletons

namespace detail {

struct LineTable {
  std::vector<std::size_t> starts;  // offset of each line's first character

  explicit LineTable(std::string_view text) {
    starts.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts.push_back(i + 1);
    }
  }

  std::size_t line_of(std::size_t offset) const {
    return static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), offset) - starts.begin()) - 1;
  }
};

struct BracePair {
  std::size_t open;
  std::size_t close;
};

// Matched '{' '}' pairs outside comments and literals, plus the offsets of
// unmatched braces.
inline std::vector<BracePair> brace_pairs(std::string_view text, std::vector<std::size_t>* unmatched = nullptr) {
  std::vector<BracePair> pairs;
  std::vector<std::size_t> stack;
  for (const auto& lx : scan_lexemes(text, nullptr)) {
    if (lx.kind != LexemeKind::punct || lx.end - lx.begin != 1) continue;
    const char c = text[lx.begin];
    if (c == '{') {
      stack.push_back(lx.begin);
    } else if (c == '}') {
      if (stack.empty()) {
        if (unmatched) unmatched->push_back(lx.begin);
      } else {
        pairs.push_back({stack.back(), lx.begin});
        stack.pop_back();
      }
    }
  }
  if (unmatched) unmatched->insert(unmatched->end(), stack.begin(), stack.end());
  return pairs;
}

}  // namespace detail

/// True when every '{' outside comments and literals is closed in order.
inline bool is_brace_balanced(std::string_view text) {
  std::vector<std::size_t> unmatched;
  detail::brace_pairs(text, &unmatched);
  return unmatched.empty();
}

inline constexpr std::string_view kHoleText = "/* … */";

/// Reduces the most compact exemplar to the lines carrying the pattern's
/// call sites plus their enclosing braces; every other run of statement
/// lines becomes a single hole line.
inline std::string synthesize_skeleton(const FrequentPattern& pattern, const std::vector<Snippet>& exemplars) {
  if (exemplars.empty()) throw std::invalid_argument("synthesize_skeleton needs at least one exemplar");
  const Snippet* chosen = nullptr;
  for (const auto& e : exemplars) {
    if (!is_subsequence(pattern.symbols, e.sequence())) {
      throw std::invalid_argument("exemplar " + e.id() + " does not support the pattern");
    }
    if (!chosen || e.sequence().size() < chosen->sequence().size() ||
        (e.sequence().size() == chosen->sequence().size() && e.id() < chosen->id())) {
      chosen = &e;
    }
  }

  std::string_view text = chosen->raw_text();
  const bool trailing_newline = !text.empty() && text.back() == '\n';
  if (trailing_newline) text.remove_suffix(1);
  const detail::LineTable lines(text);
  const std::size_t line_count = lines.starts.size();
  std::vector<bool> keep(line_count, false);

  // Leftmost embedding of the pattern in the exemplar's call tokens.
  const auto tokens = lex_snippet(text);
  std::vector<const ApiCallToken*> embedded;
  for (const auto& token : tokens) {
    if (embedded.size() < pattern.symbols.size() && canonical(token) == pattern.symbols[embedded.size()]) {
      embedded.push_back(&token);
    }
  }

  std::vector<std::size_t> open_ends;
  const auto pairs = detail::brace_pairs(text, &open_ends);
  for (const auto* token : embedded) {
    for (auto l = lines.line_of(token->begin); l <= lines.line_of(token->end); ++l) keep[l] = true;
    for (const auto& pair : pairs) {
      if (pair.open < token->offset && token->offset < pair.close) {
        keep[lines.line_of(pair.open)] = true;
        keep[lines.line_of(pair.close)] = true;
      }
    }
    for (auto pos : open_ends) {
      if (text[pos] == '{' && pos < token->offset) keep[lines.line_of(pos)] = true;
    }
  }
  // A kept brace drags its partner's line along.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& pair : pairs) {
      const auto a = lines.line_of(pair.open);
      const auto b = lines.line_of(pair.close);
      if (keep[a] != keep[b]) {
        keep[a] = keep[b] = true;
        changed = true;
      }
    }
  }

  auto line_text = [&](std::size_t l) {
    const auto from = lines.starts[l];
    const auto to = l + 1 < line_count ? lines.starts[l + 1] - 1 : text.size();
    return text.substr(from, to - from);
  };
  std::string out;
  auto append_line = [&](std::string_view s) {
    if (!out.empty()) out += '\n';
    out += s;
  };
  for (std::size_t l = 0; l < line_count;) {
    if (keep[l]) {
      append_line(line_text(l++));
      continue;
    }
    std::optional<std::string_view> first_text;
    while (l < line_count && !keep[l]) {
      const auto s = line_text(l++);
      if (!first_text && !detail::trim(s).empty()) first_text = s;
    }
    if (first_text) {
      const auto indent = first_text->find_first_not_of(" \t");
      append_line(std::string(first_text->substr(0, indent)) + std::string(kHoleText));
    }
  }
  // Close anything the exemplar itself left open.
  std::vector<std::size_t> unmatched;
  detail::brace_pairs(out, &unmatched);
  std::size_t stray_closers = 0;
  for (auto pos : unmatched) {
    if (out[pos] == '{') {
      append_line("}");
    } else {
      ++stray_closers;
    }
  }
  for (std::size_t i = 0; i < stray_closers; ++i) out.insert(0, "{\n");
  if (trailing_newline) out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Sessions

/// accept closes the session; reject advances one tier, or marks the
/// session exhausted when already at the last tier.
inline Session apply_feedback(Session s, Verdict verdict) {
  if (s.status != SessionStatus::active) {
    throw StateError("session " + s.id + " is " + std::string(to_string(s.status)));
  }
  if (verdict == Verdict::accept) {
    s.status = SessionStatus::closed;
    return s;
  }
  if (const auto next = next_tier(s.current_tier)) {
    s.current_tier = *next;
  } else {
    s.status = SessionStatus::exhausted;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Pipeline

inline PipelineResult run_pipeline(const CorpusIndex& index, const SourceClients& clients, const ContextQuery& q,
                                   const Session& s, const PipelineOptions& options = {}) {
  if (s.exhausted()) throw StateError("session " + s.id + " is exhausted");
  if (options.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  if (options.min_support && *options.min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  q.validate();

  PipelineResult result;
  PipelineTrace& trace = result.trace;
  trace.tier = s.current_tier;

  std::set<RepoTier> tiers;
  for (auto t : kAllTiers) {
    if (t <= s.current_tier) tiers.insert(t);
  }
  std::vector<Snippet> raw = search_raw(index, q.pattern, tiers, q.k_pattern);
  std::set<std::string> seen;
  for (const auto& snippet : raw) seen.insert(snippet.id());
  for (const auto& client : clients) {
    if (!client || client->tier() == RepoTier::OLR || client->tier() > s.current_tier) continue;
    auto fetched = fetch_remote(*client, q.pattern);
    if (fetched.warning) trace.warnings.push_back(*fetched.warning);
    for (auto& snippet : fetched.snippets) {
      if (!seen.insert(snippet.id()).second) continue;
      result.remote_snippets.push_back(snippet);
      raw.push_back(std::move(snippet));
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Snippet& a, const Snippet& b) {
    if (a.tier() != b.tier()) return a.tier() < b.tier();
    return a.id() < b.id();
  });
  trace.raw = raw.size();

  const auto deduped = dedupe(raw);
  trace.deduped = deduped.size();
  const auto filtered = context_filter(deduped, q);
  trace.filtered = filtered.size();

  SequenceDB db;
  for (const auto& f : filtered) db.push_back({f.snippet.id(), f.snippet.sequence()});
  trace.sequences = db.size();

  const auto min_support = options.min_support.value_or(default_min_support(db.size()));
  const auto patterns = prefixspan(db, min_support);
  trace.patterns = patterns.size();

  const std::size_t take = std::min(options.top_k, patterns.size());
  for (std::size_t r = 0; r < take; ++r) {
    const auto& pattern = patterns[r];
    std::vector<Snippet> exemplars;
    for (const auto& f : filtered) {
      if (std::binary_search(pattern.support_ids.begin(), pattern.support_ids.end(), f.snippet.id())) {
        exemplars.push_back(f.snippet);
      }
    }
    Recommendation rec;
    rec.id = "rec-" + std::to_string(r + 1);
    rec.pattern = pattern;
    rec.skeleton_text = synthesize_skeleton(pattern, exemplars);
    rec.exemplar_ids = pattern.support_ids;
    rec.score = filtered.empty() ? 0.0 : static_cast<double>(pattern.support) / static_cast<double>(filtered.size());
    result.recommendations.push_back(std::move(rec));
  }
  trace.recommended = result.recommendations.size();
  return result;
}

/// Runs the pipeline and, while it comes back empty, rejects on the
/// caller's behalf to walk the remaining tiers. Every run is appended to the
/// session's trace history.
inline PipelineResult run_with_escalation(const CorpusIndex& index, const SourceClients& clients, Session& s,
                                          const PipelineOptions& options, bool auto_escalate) {
  auto result = run_pipeline(index, clients, s.query, s, options);
  s.trace_history.push_back(result.trace);
  while (auto_escalate && result.recommendations.empty() && next_tier(s.current_tier)) {
    s = apply_feedback(std::move(s), Verdict::reject);
    auto next = run_pipeline(index, clients, s.query, s, options);
    s.trace_history.push_back(next.trace);
    next.remote_snippets.insert(next.remote_snippets.begin(), result.remote_snippets.begin(),
                                result.remote_snippets.end());
    result = std::move(next);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation harness

/// Naive-search stand-in: snippets of any tier containing pattern verbatim.
inline std::size_t baseline_count(const CorpusIndex& index, std::string_view pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::size_t count = 0;
  for (const auto& [id, snippet] : index.snippets()) {
    if (snippet.raw_text().find(pattern) != std::string::npos) ++count;
  }
  return count;
}

struct EvalRow {
  std::string query;
  std::size_t baseline_count = 0;
  std::size_t snap_count = 0;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

/// SNAP count is the number of distinct snippets backing the recommended
/// list of a fresh offline-tier run.
inline std::vector<EvalRow> evaluate(const CorpusIndex& index, const SourceClients& clients,
                                     const std::vector<ContextQuery>& queries, const PipelineOptions& options = {}) {
  if (queries.empty()) throw std::invalid_argument("evaluate needs at least one query");
  std::vector<EvalRow> rows;
  for (const auto& q : queries) {
    Session s;
    s.id = "eval";
    s.query = q;
    const auto result = run_pipeline(index, clients, q, s, options);
    std::set<std::string> backing;
    for (const auto& rec : result.recommendations) backing.insert(rec.exemplar_ids.begin(), rec.exemplar_ids.end());
    rows.push_back({q.pattern, baseline_count(index, q.pattern), backing.size()});
  }
  return rows;
}

inline std::string render_eval_table(const std::vector<EvalRow>& rows) {
  std::size_t query_width = 5;
  for (const auto& r : rows) query_width = std::max(query_width, r.query.size());
  std::ostringstream out;
  out << std::left << std::setw(6) << "Serial" << " | " << std::setw(static_cast<int>(query_width)) << "Query"
      << " | " << std::right << std::setw(8) << "Baseline" << " | " << std::setw(6) << "SNAP" << '\n';
  out << std::string(7, '-') << '+' << std::string(query_width + 2, '-') << '+' << std::string(10, '-') << '+'
      << std::string(7, '-') << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::ostringstream serial;
    serial << std::setw(2) << std::setfill('0') << i + 1;
    out << std::left << std::setw(6) << serial.str() << " | " << std::setw(static_cast<int>(query_width))
        << rows[i].query << " | " << std::right << std::setw(8) << rows[i].baseline_count << " | " << std::setw(6)
        << rows[i].snap_count << '\n';
  }
  return out.str();
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_eval_csv(const std::vector<EvalRow>& rows) {
  std::ostringstream out;
  out << "serial,query,baseline,snap\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i + 1 << ',' << csv_field(rows[i].query) << ',' << rows[i].baseline_count << ',' << rows[i].snap_count
        << '\n';
  }
  return out.str();
}

}  // namespace snap
