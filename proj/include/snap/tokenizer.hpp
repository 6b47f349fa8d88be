#pragma once

// Call-site lexer for code fragments. No grammar: works on partial snippets
// in Java/JS/PHP-like syntax and only recognizes what a call looks like.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace snap {

struct ApiCallToken {
  std::optional<std::string> receiver;  // dotted chain, e.g. "a.b"
  std::string method;
  std::size_t arity = 0;
  std::vector<std::string> arg_texts;
  std::size_t offset = 0;  // index of the opening parenthesis
  std::size_t begin = 0;   // index of the first character of the call expression
  std::size_t end = 0;     // index of the matching closing parenthesis

  friend bool operator==(const ApiCallToken&, const ApiCallToken&) = default;
};

using ApiSequence = std::vector<std::string>;

struct LexOptions {
  // An identifier preceded by one of these never starts a bare call, and
  // none of them is a call name itself.
  std::set<std::string, std::less<>> keywords{"public", "private", "static", "void", "new",
                                              "return", "if", "while", "for", "class"};
};

struct LexResult {
  std::vector<ApiCallToken> tokens;
  std::vector<std::string> warnings;
};

namespace detail {

enum class LexemeKind { identifier, number, literal, punct };

struct Lexeme {
  LexemeKind kind;
  std::size_t begin;
  std::size_t end;  // one past
};

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Splits text into identifiers, numbers, literals and punctuation. Comments
// are dropped; literal contents are never inspected.
inline std::vector<Lexeme> scan_lexemes(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<Lexeme> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
    } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      const auto close = text.find("*/", i + 2);
      if (close == std::string_view::npos) {
        if (warnings) warnings->push_back("unterminated block comment at offset " + std::to_string(i));
        i = n;
      } else {
        i = close + 2;
      }
    } else if (c == '"' || c == '\'' || c == '`') {
      // Backtick literals may span lines; the other two stop at end of line.
      const std::size_t start = i++;
      bool closed = false;
      while (i < n) {
        if (text[i] == '\\') {
          i += 2;
          continue;
        }
        if (text[i] == c) {
          closed = true;
          ++i;
          break;
        }
        if (text[i] == '\n' && c != '`') break;
        ++i;
      }
      if (!closed && warnings) warnings->push_back("unterminated string literal at offset " + std::to_string(start));
      i = std::min(i, n);
      out.push_back({LexemeKind::literal, start, i});
    } else if (is_ident_start(c)) {
      const std::size_t start = i;
      while (i < n && is_ident_char(text[i])) ++i;
      out.push_back({LexemeKind::identifier, start, i});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < n && (is_ident_char(text[i]) || text[i] == '.')) ++i;
      out.push_back({LexemeKind::number, start, i});
    } else if ((c == '-' && i + 1 < n && text[i + 1] == '>') || (c == ':' && i + 1 < n && text[i + 1] == ':') ||
               (c == '?' && i + 1 < n && text[i + 1] == '.')) {
      out.push_back({LexemeKind::punct, i, i + 2});
      i += 2;
    } else {
      out.push_back({LexemeKind::punct, i, i + 1});
      ++i;
    }
  }
  return out;
}

inline bool is_member_access(std::string_view lexeme) {
  return lexeme == "." || lexeme == "->" || lexeme == "::" || lexeme == "?.";
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Names that look like calls but are control flow in the supported languages.
inline bool is_control_word(std::string_view word) {
  return word == "switch" || word == "catch" || word == "synchronized" || word == "function" ||
         word == "sizeof" || word == "typeof" || word == "elseif" || word == "foreach";
}

}  // namespace detail

/// Extracts every call site of the form `ident(.ident)* (` in offset order.
/// Unbalanced calls are dropped with a warning; lexing never fails.
inline LexResult lex_snippet_with_warnings(std::string_view text, const LexOptions& options = {}) {
  using detail::LexemeKind;
  LexResult result;
  const auto lexemes = detail::scan_lexemes(text, &result.warnings);
  auto str = [&](const detail::Lexeme& l) { return text.substr(l.begin, l.end - l.begin); };
  auto is_punct = [&](std::size_t idx, std::string_view p) {
    return lexemes[idx].kind == LexemeKind::punct && str(lexemes[idx]) == p;
  };

  for (std::size_t i = 0; i + 1 < lexemes.size(); ++i) {
    if (lexemes[i].kind != LexemeKind::identifier || !is_punct(i + 1, "(")) continue;
    const std::string_view name = str(lexemes[i]);
    if (options.keywords.contains(name) || detail::is_control_word(name)) continue;

    std::vector<std::string_view> chain{name};
    std::size_t first = i;
    while (first >= 2 && lexemes[first - 1].kind == LexemeKind::punct &&
           detail::is_member_access(str(lexemes[first - 1])) &&
           lexemes[first - 2].kind == LexemeKind::identifier) {
      chain.insert(chain.begin(), str(lexemes[first - 2]));
      first -= 2;
    }
    if (chain.size() == 1 && i > 0 && lexemes[i - 1].kind == LexemeKind::identifier) continue;

    // Match the parenthesis and split top-level arguments.
    std::size_t depth = 0;
    std::size_t close = lexemes.size();
    std::vector<std::size_t> separators{lexemes[i + 1].end};
    for (std::size_t j = i + 1; j < lexemes.size(); ++j) {
      if (lexemes[j].kind != LexemeKind::punct) continue;
      const auto p = str(lexemes[j]);
      if (p == "(" || p == "[" || p == "{") {
        ++depth;
      } else if (p == ")" || p == "]" || p == "}") {
        if (--depth == 0) {
          close = j;
          break;
        }
      } else if (p == "," && depth == 1) {
        separators.push_back(lexemes[j].begin + 1);
      }
    }
    if (close == lexemes.size()) {
      result.warnings.push_back("unbalanced parentheses in call '" + std::string(name) + "' at offset " +
                                std::to_string(lexemes[i + 1].begin));
      continue;
    }

    ApiCallToken token;
    if (chain.size() > 1) {
      std::string receiver;
      for (std::size_t c = 0; c + 1 < chain.size(); ++c) {
        if (c) receiver += '.';
        receiver += chain[c];
      }
      token.receiver = std::move(receiver);
    }
    token.method = std::string(name);
    token.offset = lexemes[i + 1].begin;
    token.begin = lexemes[first].begin;
    token.end = lexemes[close].begin;
    separators.push_back(lexemes[close].begin + 1);
    const bool empty_args = close == i + 2;
    if (!empty_args) {
      for (std::size_t s = 0; s + 1 < separators.size(); ++s) {
        const auto from = separators[s];
        const auto to = separators[s + 1] - 1;
        token.arg_texts.emplace_back(detail::trim(text.substr(from, to - from)));
      }
    }
    token.arity = token.arg_texts.size();
    result.tokens.push_back(std::move(token));
  }
  return result;
}

inline std::vector<ApiCallToken> lex_snippet(std::string_view text, const LexOptions& options = {}) {
  return lex_snippet_with_warnings(text, options).tokens;
}

/// "<last-receiver-segment>.<method>/<arity>", or "<method>/<arity>" without receiver.
inline std::string canonical(const ApiCallToken& token) {
  std::string out;
  if (token.receiver) {
    const auto& r = *token.receiver;
    const auto dot = r.rfind('.');
    out = dot == std::string::npos ? r : r.substr(dot + 1);
    out += '.';
  }
  out += token.method;
  out += '/';
  out += std::to_string(token.arity);
  return out;
}

inline ApiSequence api_sequence(std::string_view text, const LexOptions& options = {}) {
  ApiSequence seq;
  for (const auto& token : lex_snippet(text, options)) seq.push_back(canonical(token));
  return seq;
}

}  // namespace snap
