#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "snap/corpus.hpp"
#include "snap/matcher.hpp"
#include "snap/miner.hpp"

namespace snap::testing {

inline std::filesystem::path fixture_dir() { return SNAP_FIXTURE_DIR; }

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = std::filesystem::temp_directory_path() / ("snap-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string random_string(std::mt19937& rng, std::size_t len, std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[pick(rng)];
  return s;
}

// Minimal edit distance of pattern against any window text[i..end], i <= end+1,
// by trying every start. Independent of both library routes.
inline std::size_t brute_force_window_distance(std::string_view pattern, std::string_view text, std::size_t end) {
  std::size_t best = pattern.size();
  for (std::size_t start = 0; start <= end + 1; ++start) {
    best = std::min(best, edit_distance(pattern, text.substr(start, end + 1 - start)));
  }
  return best;
}

inline std::vector<MatchHit> brute_force_occurrences(std::string_view pattern, std::string_view text, std::size_t k) {
  std::vector<MatchHit> hits;
  for (std::size_t end = 0; end < text.size(); ++end) {
    const auto d = brute_force_window_distance(pattern, text, end);
    if (d <= k) hits.push_back({end, d});
  }
  return hits;
}

inline SequenceDB random_sequence_db(std::mt19937& rng, std::size_t max_sequences = 8, std::size_t max_len = 6,
                                     std::size_t alphabet = 5) {
  std::uniform_int_distribution<std::size_t> n_seq(0, max_sequences);
  std::uniform_int_distribution<std::size_t> n_len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  SequenceDB db;
  const auto n = n_seq(rng);
  for (std::size_t i = 0; i < n; ++i) {
    SequenceRecord rec;
    rec.id = "s" + std::to_string(i);
    const auto len = n_len(rng);
    for (std::size_t j = 0; j < len; ++j) rec.symbols.push_back(std::string(1, static_cast<char>('a' + sym(rng))));
    db.push_back(std::move(rec));
  }
  return db;
}

inline CorpusIndex trio_index() {
  CorpusIndex index;
  ingest_directory(index, fixture_dir() / "trio", RepoTier::OLR);
  return index;
}

// Java-like snippet built from a small call vocabulary so random corpora
// share calls often enough to produce patterns.
inline std::string random_code_snippet(std::mt19937& rng, std::size_t serial) {
  static const std::vector<std::string> kStatements = {
      "manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);",
      "IAction action = registry.getAction(id);",
      "if (action.isEnabled()) { manager.update(true); }",
      "connection.open();",
      "SqlCommand command = connection.createCommand();",
      "response.setContent(body);",
      "response.setContentType(\"text/html\");",
      "WebResponse r = request.getResponse();",
      "log.info(\"step\", count);",
      "graph.publish(post);",
      "// manager.appendToGroup(ignored, in_comment);",
      "String s = \"connection.open() inside literal\";",
      "for (int i = 0; i < n; i++) { list.add(items.get(i)); }",
  };
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_int_distribution<std::size_t> pick(0, kStatements.size() - 1);
  std::string text = "public class Gen" + std::to_string(serial) + " {\n    public void run() {\n";
  const auto n = count(rng);
  for (std::size_t i = 0; i < n; ++i) text += "        " + kStatements[pick(rng)] + "\n";
  text += "    }\n}\n";
  return text;
}

}  // namespace snap::testing
