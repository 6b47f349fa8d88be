#pragma once

// HTTP JSON API over the recommender. Sessions live in memory; each one is
// guarded by its own mutex so feedback on one session is linearized while
// distinct sessions proceed concurrently. The corpus index is shared
// read-only.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "httplib.h"
#include "snap/payload.hpp"
#include "snap/recommender.hpp"

namespace snap {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

inline ServiceResponse error_response(int status, std::string message) {
  return {status, {{"error", std::move(message)}}};
}

class Service {
 public:
  Service(std::shared_ptr<const CorpusIndex> index, SourceClients clients)
      : index_(std::move(index)), clients_(std::move(clients)) {
    if (!index_) throw std::invalid_argument("service needs an index");
    std::random_device rd;
    std::ostringstream prefix;
    prefix << std::hex << (static_cast<std::uint32_t>(rd()) & 0xffffffu);
    id_prefix_ = prefix.str();
  }

  ServiceResponse create_session(const nlohmann::json& body) {
    QueryRequest req;
    try {
      req = parse_query_request(body);
    } catch (const std::invalid_argument& e) {
      return error_response(400, e.what());
    }
    auto entry = std::make_shared<Entry>();
    entry->options = req.options;
    entry->session.id = "s-" + id_prefix_ + "-" + std::to_string(++counter_);
    entry->session.query = req.query;
    std::lock_guard entry_lock(entry->mu);
    auto result = run_with_escalation(*index_, clients_, entry->session, entry->options, req.auto_escalate);
    remember(entry, std::move(result));
    {
      std::lock_guard lock(store_mu_);
      sessions_.emplace(entry->session.id, entry);
    }
    return {201, payload(*entry)};
  }

  ServiceResponse post_feedback(const std::string& session_id, const nlohmann::json& body) {
    const auto entry = find(session_id);
    if (!entry) return error_response(404, "unknown session " + session_id);
    const auto verdict = body.is_object() ? body.find("verdict") : body.end();
    if (!body.is_object() || verdict == body.end() || !verdict->is_string()) {
      return error_response(400, "'verdict' must be \"accept\" or \"reject\"");
    }
    Verdict v;
    if (*verdict == "accept") {
      v = Verdict::accept;
    } else if (*verdict == "reject") {
      v = Verdict::reject;
    } else {
      return error_response(400, "'verdict' must be \"accept\" or \"reject\"");
    }

    std::lock_guard entry_lock(entry->mu);
    try {
      entry->session = apply_feedback(entry->session, v);
    } catch (const StateError& e) {
      return error_response(409, e.what());
    }
    if (v == Verdict::reject && !entry->session.exhausted()) {
      auto result = run_pipeline(*index_, clients_, entry->session.query, entry->session, entry->options);
      entry->session.trace_history.push_back(result.trace);
      remember(entry, std::move(result));
    }
    return {200, payload(*entry)};
  }

  ServiceResponse get_session(const std::string& session_id) const {
    const auto entry = find(session_id);
    if (!entry) return error_response(404, "unknown session " + session_id);
    std::lock_guard entry_lock(entry->mu);
    return {200, payload(*entry)};
  }

  ServiceResponse get_snippet(const std::string& snippet_id) const {
    const Snippet* found = index_->find(snippet_id);
    std::optional<Snippet> cached;
    if (!found) {
      std::lock_guard lock(cache_mu_);
      if (const auto it = remote_cache_.find(snippet_id); it != remote_cache_.end()) cached = it->second;
    }
    if (!found && !cached) return error_response(404, "unknown snippet " + snippet_id);
    const Snippet& s = found ? *found : *cached;
    return {200, {{"id", s.id()}, {"tier", to_string(s.tier())}, {"raw_text", s.raw_text()}, {"meta", s.meta()},
                  {"origin", s.origin()}}};
  }

  static ServiceResponse health() { return {200, {{"status", "ok"}}}; }

  /// Every session's current payload, keyed by id.
  nlohmann::json snapshot() const {
    std::vector<std::shared_ptr<Entry>> entries;
    {
      std::lock_guard lock(store_mu_);
      for (const auto& [id, entry] : sessions_) entries.push_back(entry);
    }
    nlohmann::json out = nlohmann::json::object();
    for (const auto& entry : entries) {
      std::lock_guard entry_lock(entry->mu);
      out[entry->session.id] = payload(*entry);
    }
    return out;
  }

 private:
  struct Entry {
    mutable std::mutex mu;
    Session session;
    PipelineOptions options;
    std::vector<Recommendation> recommendations;
    std::optional<PipelineTrace> trace;
  };

  std::shared_ptr<Entry> find(const std::string& id) const {
    std::lock_guard lock(store_mu_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  void remember(const std::shared_ptr<Entry>& entry, PipelineResult result) {
    entry->recommendations = std::move(result.recommendations);
    entry->trace = std::move(result.trace);
    std::lock_guard lock(cache_mu_);
    for (auto& s : result.remote_snippets) {
      const auto id = s.id();
      remote_cache_.insert_or_assign(id, std::move(s));
    }
  }

  static nlohmann::json payload(const Entry& entry) {
    return session_payload(entry.session, entry.recommendations, entry.trace);
  }

  std::shared_ptr<const CorpusIndex> index_;
  SourceClients clients_;
  std::string id_prefix_;
  std::atomic<std::uint64_t> counter_{0};
  mutable std::mutex store_mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  mutable std::mutex cache_mu_;
  std::map<std::string, Snippet> remote_cache_;
};

/// Registers the /api routes on `server`. `service` must outlive it.
inline void mount(httplib::Server& server, Service& service) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto parse_body = [](const httplib::Request& req) -> std::optional<nlohmann::json> {
    try {
      return nlohmann::json::parse(req.body.empty() ? std::string("{}") : req.body);
    } catch (const nlohmann::json::parse_error&) {
      return std::nullopt;
    }
  };

  server.Get("/api/health", [reply](const httplib::Request&, httplib::Response& res) { reply(res, Service::health()); });
  server.Post("/api/sessions", [&service, reply, parse_body](const httplib::Request& req, httplib::Response& res) {
    const auto body = parse_body(req);
    reply(res, body ? service.create_session(*body) : error_response(400, "malformed JSON body"));
  });
  server.Post(R"(/api/sessions/([^/]+)/feedback)",
              [&service, reply, parse_body](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                reply(res, body ? service.post_feedback(req.matches[1], *body)
                                : error_response(400, "malformed JSON body"));
              });
  server.Get(R"(/api/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_session(req.matches[1]));
  });
  server.Get(R"(/api/snippets/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_snippet(req.matches[1]));
  });
}

struct ListenAddress {
  std::string host = "127.0.0.1";
  int port = 7077;
};

/// "host:port" -> address; throws std::invalid_argument.
inline ListenAddress parse_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::invalid_argument("address must look like host:port");
  }
  ListenAddress addr;
  addr.host = std::string(text.substr(0, colon));
  const auto port_text = std::string(text.substr(colon + 1));
  std::size_t used = 0;
  int port = -1;
  try {
    port = std::stoi(port_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != port_text.size() || port < 0 || port > 65535) throw std::invalid_argument("invalid port " + port_text);
  addr.port = port;
  return addr;
}

}  // namespace snap
