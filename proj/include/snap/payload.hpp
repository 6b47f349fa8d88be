#pragma once

// Wire shapes shared by the HTTP service and `snap query --format json`.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "snap/recommender.hpp"

namespace snap {

inline nlohmann::json to_json(const Recommendation& rec) {
  return {{"id", rec.id},
          {"symbols", rec.pattern.symbols},
          {"support", rec.pattern.support},
          {"score", rec.score},
          {"skeleton", rec.skeleton_text},
          {"exemplar_ids", rec.exemplar_ids}};
}

inline nlohmann::json to_json(const std::vector<Recommendation>& recs) {
  auto out = nlohmann::json::array();
  for (const auto& r : recs) out.push_back(to_json(r));
  return out;
}

inline nlohmann::json to_json(const PipelineTrace& t) {
  return {{"raw", t.raw},         {"deduped", t.deduped},
          {"filtered", t.filtered}, {"sequences", t.sequences},
          {"patterns", t.patterns}, {"recommended", t.recommended},
          {"tier", to_string(t.tier)}, {"warnings", t.warnings}};
}

inline nlohmann::json session_payload(const Session& s, const std::vector<Recommendation>& recs,
                                      const std::optional<PipelineTrace>& trace) {
  nlohmann::json out{{"session_id", s.id},
                     {"tier", to_string(s.current_tier)},
                     {"status", to_string(s.status)},
                     {"recommendations", to_json(recs)}};
  out["trace"] = trace ? to_json(*trace) : nlohmann::json(nullptr);
  return out;
}

/// Query request as accepted by POST /api/sessions.
struct QueryRequest {
  ContextQuery query;
  PipelineOptions options;
  bool auto_escalate = false;
};

/// Throws std::invalid_argument naming the offending field.
inline QueryRequest parse_query_request(const nlohmann::json& body) {
  if (!body.is_object()) throw std::invalid_argument("request body must be a JSON object");
  QueryRequest req;
  const auto pattern = body.find("pattern");
  if (pattern == body.end() || !pattern->is_string() || pattern->get<std::string>().empty()) {
    throw std::invalid_argument("'pattern' must be a non-empty string");
  }
  req.query.pattern = pattern->get<std::string>();

  auto optional_text = [&](const char* key) -> std::optional<std::string> {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw std::invalid_argument(std::string("'") + key + "' must be a string");
    if (it->get<std::string>().empty()) return std::nullopt;
    return it->get<std::string>();
  };
  auto count = [&](const char* key) -> std::optional<std::size_t> {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_number_integer() || it->get<long long>() < 0) {
      throw std::invalid_argument(std::string("'") + key + "' must be a non-negative integer");
    }
    return it->get<std::size_t>();
  };

  req.query.pre = optional_text("pre");
  req.query.post = optional_text("post");
  if (auto v = count("k_pattern")) req.query.k_pattern = *v;
  if (auto v = count("k_context")) req.query.k_context = *v;
  if (auto v = count("window")) req.query.window = *v;
  req.options.min_support = count("min_support");
  if (auto v = count("top_k")) req.options.top_k = *v;
  if (const auto it = body.find("auto_escalate"); it != body.end() && !it->is_null()) {
    if (!it->is_boolean()) throw std::invalid_argument("'auto_escalate' must be a boolean");
    req.auto_escalate = it->get<bool>();
  }
  if (req.options.top_k < 1) throw std::invalid_argument("'top_k' must be >= 1");
  if (req.options.min_support && *req.options.min_support < 1) throw std::invalid_argument("'min_support' must be >= 1");
  req.query.validate();
  return req;
}

}  // namespace snap
