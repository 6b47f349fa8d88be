#pragma once

// `snap` command line: ingest / query / eval / serve.
// Exit codes: 0 success, 2 I/O or format error, 64 usage error.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "snap/corpus.hpp"
#include "snap/payload.hpp"
#include "snap/recommender.hpp"
#include "snap/service.hpp"

namespace snap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

struct CliConfig {
  std::string index_path;
  std::string corpus_path;
  std::string tier = "olr";
  std::vector<std::string> extensions;
  std::string pattern;
  std::string pre;
  std::string post;
  std::size_t k_pattern = 1;
  std::size_t k_context = 2;
  std::size_t window = 120;
  std::optional<std::size_t> min_support;
  std::size_t top_k = 10;
  std::string format;
  std::string snar_fixture;
  std::string ossnr_fixture;
  bool auto_escalate = false;
  std::string queries_path;
  std::string addr;
  std::string snapshot_path;
};

namespace detail {

inline SourceClients make_clients(const CliConfig& cfg) {
  SourceClients clients;
  if (!cfg.snar_fixture.empty()) {
    clients.push_back(std::make_shared<FixtureSourceClient>(RepoTier::SNAR, cfg.snar_fixture));
  }
  if (!cfg.ossnr_fixture.empty()) {
    clients.push_back(std::make_shared<FixtureSourceClient>(RepoTier::OSSNR, cfg.ossnr_fixture));
  }
  return clients;
}

inline void print_report(const IngestReport& report, std::ostream& out) {
  out << "ingested " << report.ingested << ", skipped " << report.skipped << '\n';
  for (const auto& [path, reason] : report.skip_reasons) out << "  skipped " << path << ": " << reason << '\n';
}

inline void print_text(const PipelineResult& result, const Session& s, std::ostream& out) {
  const auto& t = result.trace;
  out << "tier " << to_string(s.current_tier) << ": raw " << t.raw << " > deduped " << t.deduped << " > filtered "
      << t.filtered << " > patterns " << t.patterns << " > recommended " << t.recommended << '\n';
  for (const auto& w : t.warnings) out << "warning: " << w << '\n';
  for (std::size_t i = 0; i < result.recommendations.size(); ++i) {
    const auto& rec = result.recommendations[i];
    out << '\n' << '#' << i + 1 << ' ' << rec.id << "  support " << rec.pattern.support << "  score " << std::fixed
        << std::setprecision(3) << rec.score << '\n';
    out << "  pattern:";
    for (const auto& sym : rec.pattern.symbols) out << ' ' << sym;
    out << "\n  exemplars:";
    for (const auto& id : rec.exemplar_ids) out << ' ' << id;
    out << "\n  ---\n";
    std::istringstream lines(rec.skeleton_text);
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
}

inline std::atomic<bool> g_stop_requested{false};

inline void on_stop_signal(int) { g_stop_requested = true; }

}  // namespace detail

inline int cmd_ingest(const CliConfig& cfg, std::ostream& out) {
  const auto tier = parse_tier(cfg.tier);
  if (!tier) throw std::invalid_argument("unknown tier '" + cfg.tier + "'");
  CorpusIndex index;
  if (std::filesystem::exists(cfg.index_path)) index = load_index(cfg.index_path);

  IngestReport report;
  if (std::filesystem::is_regular_file(cfg.corpus_path)) {
    for (auto& s : load_corpus_file(cfg.corpus_path, tier)) {
      if (index.contains(s.id())) {
        ++report.skipped;
        report.skip_reasons.emplace_back(s.origin(), "duplicate content of " + s.id());
        continue;
      }
      index.add(std::move(s));
      ++report.ingested;
    }
  } else {
    IngestOptions options;
    if (!cfg.extensions.empty()) options.extensions = {cfg.extensions.begin(), cfg.extensions.end()};
    report = ingest_directory(index, cfg.corpus_path, *tier, options);
  }
  save_index(index, cfg.index_path);
  detail::print_report(report, out);
  return kExitOk;
}

inline ContextQuery query_from(const CliConfig& cfg) {
  ContextQuery q;
  q.pattern = cfg.pattern;
  if (!cfg.pre.empty()) q.pre = cfg.pre;
  if (!cfg.post.empty()) q.post = cfg.post;
  q.k_pattern = cfg.k_pattern;
  q.k_context = cfg.k_context;
  q.window = cfg.window;
  q.validate();
  return q;
}

inline int cmd_query(const CliConfig& cfg, std::ostream& out) {
  const auto q = query_from(cfg);
  const auto index = load_index(cfg.index_path);
  const auto clients = detail::make_clients(cfg);
  Session s;
  s.id = "cli";
  s.query = q;
  const PipelineOptions options{cfg.top_k, cfg.min_support};
  const auto result = run_with_escalation(index, clients, s, options, cfg.auto_escalate);
  if (cfg.format == "json") {
    auto payload = session_payload(s, result.recommendations, result.trace);
    payload.erase("session_id");
    out << payload.dump(2) << '\n';
  } else {
    detail::print_text(result, s, out);
  }
  return kExitOk;
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.queries_path);
  if (!in) throw IoError("cannot read " + cfg.queries_path);
  std::vector<ContextQuery> queries;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) continue;
    ContextQuery q;
    q.pattern = line;
    q.k_pattern = cfg.k_pattern;
    q.k_context = cfg.k_context;
    q.window = cfg.window;
    queries.push_back(std::move(q));
  }
  if (queries.empty()) throw std::invalid_argument("query file " + cfg.queries_path + " holds no queries");
  const auto index = load_index(cfg.index_path);
  const auto rows = evaluate(index, detail::make_clients(cfg), queries, PipelineOptions{cfg.top_k, cfg.min_support});
  out << (cfg.format == "csv" ? render_eval_csv(rows) : render_eval_table(rows));
  return kExitOk;
}

inline int cmd_serve(const CliConfig& cfg, std::ostream& out) {
  std::string addr_text = cfg.addr;
  if (addr_text.empty()) {
    const char* env = std::getenv("SNAP_ADDR");
    addr_text = env && *env ? env : "127.0.0.1:7077";
  }
  const auto addr = parse_address(addr_text);
  auto index = std::make_shared<const CorpusIndex>(load_index(cfg.index_path));
  Service service(index, detail::make_clients(cfg));
  httplib::Server server;
  mount(server, service);

  detail::g_stop_requested = false;
  std::signal(SIGINT, detail::on_stop_signal);
  std::signal(SIGTERM, detail::on_stop_signal);
  std::thread watcher([&server] {
    while (!detail::g_stop_requested) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });

  if (!server.bind_to_port(addr.host, addr.port)) {
    detail::g_stop_requested = true;
    watcher.join();
    throw IoError("cannot listen on " + addr_text);
  }
  out << "serving " << index->size() << " snippets on http://" << addr.host << ':' << addr.port << std::endl;
  server.listen_after_bind();
  detail::g_stop_requested = true;
  watcher.join();

  if (!cfg.snapshot_path.empty()) {
    std::ofstream snap_out(cfg.snapshot_path, std::ios::trunc);
    if (!snap_out) throw IoError("cannot write " + cfg.snapshot_path);
    snap_out << service.snapshot().dump(2) << '\n';
  }
  return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"API usage pattern recommender over a tiered snippet corpus", "snap"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_fixtures = [&](CLI::App* sub) {
    sub->add_option("--snar-fixture", cfg.snar_fixture, "JSON fixture backing the SNAR tier");
    sub->add_option("--ossnr-fixture", cfg.ossnr_fixture, "JSON fixture backing the OSSNR tier");
  };
  auto add_mining = [&](CLI::App* sub) {
    sub->add_option("--min-support", cfg.min_support, "minimum pattern support (default max(2, 10% of filtered))")
        ->check(CLI::PositiveNumber);
    sub->add_option("--top-k", cfg.top_k, "recommendations to keep")->check(CLI::PositiveNumber);
  };

  auto* ingest = app.add_subcommand("ingest", "add a directory or JSON-Lines corpus file to an index");
  ingest->add_option("source", cfg.corpus_path, "directory or .jsonl corpus file")->required();
  ingest->add_option("--tier", cfg.tier, "olr, snar or ossnr")->check(CLI::IsMember({"olr", "snar", "ossnr"}, CLI::ignore_case));
  ingest->add_option("--index", cfg.index_path, "index file (created or extended)")->required();
  ingest->add_option("--ext", cfg.extensions, "accepted file extensions, e.g. .java");

  auto* query = app.add_subcommand("query", "run one query and print recommendations");
  query->add_option("--index", cfg.index_path)->required();
  query->add_option("--pattern", cfg.pattern)->required();
  query->add_option("--pre", cfg.pre, "context expected before the pattern");
  query->add_option("--post", cfg.post, "context expected after the pattern");
  query->add_option("--k-pattern", cfg.k_pattern)->check(CLI::NonNegativeNumber);
  query->add_option("--k-context", cfg.k_context)->check(CLI::NonNegativeNumber);
  query->add_option("--window", cfg.window)->check(CLI::NonNegativeNumber);
  add_mining(query);
  query->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  add_fixtures(query);
  query->add_flag("--auto-escalate", cfg.auto_escalate, "walk repository tiers while results are empty");

  auto* eval = app.add_subcommand("eval", "compare naive search counts with recommendation counts");
  eval->add_option("--index", cfg.index_path)->required();
  eval->add_option("--queries", cfg.queries_path, "one query pattern per line")->required();
  eval->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "csv"}))->default_val("table");
  eval->add_option("--k-pattern", cfg.k_pattern, "anchor edit distance (default 0)")->check(CLI::NonNegativeNumber)
      ->default_val(0);
  add_mining(eval);
  add_fixtures(eval);

  auto* serve = app.add_subcommand("serve", "run the HTTP API");
  serve->add_option("--index", cfg.index_path)->required();
  serve->add_option("--addr", cfg.addr, "host:port (default $SNAP_ADDR or 127.0.0.1:7077)");
  serve->add_option("--snapshot", cfg.snapshot_path, "write sessions here on shutdown");
  add_fixtures(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(cfg, out);
    if (*query) return cmd_query(cfg, out);
    if (*eval) return cmd_eval(cfg, out);
    if (*serve) return cmd_serve(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace snap
