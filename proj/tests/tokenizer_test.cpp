#include <gtest/gtest.h>

#include <random>

#include "snap/tokenizer.hpp"
#include "test_support.hpp"

namespace snap {
namespace {

constexpr const char* kMenuSnippet = R"(public class Context{
    public void Menu(SocialMenuManager manager){
        GEFActionConstants.addStandardActionGroups(manager);

        IAction action;
        action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);

        if(action.isEnabled())

        manager.appendToGroup(GEFActionConstants.Group_VIEW,Action);}})";

std::vector<std::string> methods(const std::vector<ApiCallToken>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.method);
  return out;
}

struct Shape {
  std::optional<std::string> receiver;
  std::string method;
  std::size_t arity;
  bool operator==(const Shape&) const = default;
};

std::vector<Shape> shapes(std::string_view text) {
  std::vector<Shape> out;
  for (const auto& t : lex_snippet(text)) out.push_back({t.receiver, t.method, t.arity});
  return out;
}

TEST(LexSnippet, SingleQualifiedCall) {
  const auto tokens = lex_snippet("manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].receiver, "manager");
  EXPECT_EQ(tokens[0].method, "appendToGroup");
  EXPECT_EQ(tokens[0].arity, 2u);
  EXPECT_EQ(tokens[0].arg_texts, (std::vector<std::string>{"GEFActionConstants.GROUP_VIEW", "action"}));
  EXPECT_EQ(tokens[0].offset, 21u);
}

TEST(LexSnippet, EmptyText) { EXPECT_TRUE(lex_snippet("").empty()); }

TEST(LexSnippet, MenuSnippetClassBody) {
  const auto tokens = lex_snippet(kMenuSnippet);
  EXPECT_EQ(methods(tokens),
            (std::vector<std::string>{"addStandardActionGroups", "getAction", "isEnabled", "appendToGroup"}));
  EXPECT_EQ(api_sequence(kMenuSnippet),
            (ApiSequence{"GEFActionConstants.addStandardActionGroups/1", "actionRegistry.getAction/1",
                         "action.isEnabled/0", "manager.appendToGroup/2"}));
}

TEST(LexSnippet, NestedCallsAreEmittedInOffsetOrder) {
  const auto tokens = lex_snippet("outer(inner(x), y.z(1, 2));");
  EXPECT_EQ(methods(tokens), (std::vector<std::string>{"outer", "inner", "z"}));
  EXPECT_EQ(tokens[0].arity, 2u);
  EXPECT_EQ(tokens[0].arg_texts[0], "inner(x)");
  EXPECT_EQ(tokens[2].arity, 2u);
}

TEST(LexSnippet, DeclarationsAndKeywordsAreNotCalls) {
  EXPECT_TRUE(lex_snippet("void Menu(SocialMenuManager manager) {}").empty());
  EXPECT_TRUE(lex_snippet("if (x) { } while (y) { } for (;;) {}").empty());
  EXPECT_TRUE(lex_snippet("Foo bar(int a);").empty());
  EXPECT_TRUE(lex_snippet("x = new Widget(1);").empty());
  EXPECT_EQ(methods(lex_snippet("x = make(1);")), std::vector<std::string>{"make"});
}

TEST(LexSnippet, ArityCountsTopLevelArgumentsOnly) {
  EXPECT_EQ(lex_snippet("f();")[0].arity, 0u);
  EXPECT_EQ(lex_snippet("f(  );")[0].arity, 0u);
  EXPECT_EQ(lex_snippet("f(\"\");")[0].arity, 1u);
  EXPECT_EQ(lex_snippet("f(a[1, 2], {x, y}, \"p,q\");")[0].arity, 3u);
}

TEST(LexSnippet, StringsAndCommentsAreOpaque) {
  EXPECT_TRUE(lex_snippet("// a.b(c)\n/* d.e(f) */ \"g.h(i)\" 'j(k)'").empty());
}

TEST(LexSnippet, OtherMemberSeparators) {
  const auto php = lex_snippet("$db->query($sql);");
  ASSERT_EQ(php.size(), 1u);
  EXPECT_EQ(php[0].receiver, "$db");
  EXPECT_EQ(canonical(php[0]), "$db.query/1");
  EXPECT_EQ(canonical(lex_snippet("std::sort(a, b);")[0]), "std.sort/2");
}

TEST(LexSnippet, UnbalancedCallIsDroppedWithWarning) {
  const auto result = lex_snippet_with_warnings("a.first(1); b.second(x, c.third(2);");
  EXPECT_EQ(methods(result.tokens), (std::vector<std::string>{"first", "third"}));
  ASSERT_FALSE(result.warnings.empty());
  EXPECT_NE(result.warnings[0].find("second"), std::string::npos);
}

TEST(LexSnippet, UnterminatedCommentWarnsButKeepsEarlierCalls) {
  const auto result = lex_snippet_with_warnings("a.b(); /* never closed c.d();");
  EXPECT_EQ(methods(result.tokens), std::vector<std::string>{"b"});
  EXPECT_FALSE(result.warnings.empty());
}

TEST(Canonical, Formatting) {
  ApiCallToken t;
  t.receiver = "manager";
  t.method = "appendToGroup";
  t.arity = 2;
  EXPECT_EQ(canonical(t), "manager.appendToGroup/2");

  ApiCallToken bare;
  bare.method = "open";
  EXPECT_EQ(canonical(bare), "open/0");

  ApiCallToken qualified;
  qualified.receiver = "GEFActionConstants";
  qualified.method = "addStandardActionGroups";
  qualified.arity = 1;
  EXPECT_EQ(canonical(qualified), "GEFActionConstants.addStandardActionGroups/1");

  ApiCallToken chained;
  chained.receiver = "this.registry";
  chained.method = "get";
  chained.arity = 1;
  EXPECT_EQ(canonical(chained), "registry.get/1");
}

// Properties over generated Java-like fragments.

TEST(LexProperties, DeterministicAndOffsetsStrictlyIncrease) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto text = testing::random_code_snippet(rng, iter);
    const auto a = lex_snippet(text);
    EXPECT_EQ(a, lex_snippet(text));
    for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].offset, a[i].offset);
    for (const auto& t : a) {
      EXPECT_FALSE(t.method.empty());
      EXPECT_EQ(t.arity, t.arg_texts.size());
      EXPECT_EQ(text[t.offset], '(');
    }
  }
}

TEST(LexProperties, CallTextInsideCommentsOrLiteralsChangesNothing) {
  std::mt19937 rng(12);
  const std::vector<std::string> inserts = {"// x.y(z)\n", "/* p.q(1, 2) */", "\"s.t(u)\";", "'v(w)';"};
  for (int iter = 0; iter < 200; ++iter) {
    const auto text = testing::random_code_snippet(rng, iter);
    // Insert at a line boundary so no token is split.
    std::vector<std::size_t> cuts{0};
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') cuts.push_back(i + 1);
    }
    const auto cut = cuts[rng() % cuts.size()];
    const auto& ins = inserts[rng() % inserts.size()];
    const auto mutated = text.substr(0, cut) + ins + "\n" + text.substr(cut);
    EXPECT_EQ(shapes(mutated), shapes(text)) << mutated;
  }
}

TEST(LexProperties, ConcatenationOfBalancedFragments) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const auto a = testing::random_code_snippet(rng, iter);
    const auto b = testing::random_code_snippet(rng, iter + 1000);
    auto expected = shapes(a);
    const auto tail = shapes(b);
    expected.insert(expected.end(), tail.begin(), tail.end());
    EXPECT_EQ(shapes(a + "\n" + b), expected);
  }
}

}  // namespace
}  // namespace snap
