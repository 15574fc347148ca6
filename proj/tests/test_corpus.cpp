#include <doctest.h>

#include <sstream>

#include "abl/corpus.hpp"
#include "abl/error.hpp"
#include "abl/rng.hpp"
#include "support/oracles.hpp"

using namespace abl;

namespace {

Sentence sent(int id, std::initializer_list<const char*> toks) {
  std::vector<std::string> v;
  for (const char* t : toks) v.emplace_back(t);
  return make_sentence(id, std::move(v));
}

// Random well-formed tree over give-or-take `budget` leaves.
Tree random_tree(SplitMix64& rng, int depth = 0) {
  if (depth > 3 || rng.next_below(3) == 0)
    return leaf(std::string(1, static_cast<char>('a' + rng.next_below(6))));
  const int arity = 1 + static_cast<int>(rng.next_below(3));
  std::vector<Tree> children;
  for (int i = 0; i < arity; ++i) children.push_back(random_tree(rng, depth + 1));
  return node("N" + std::to_string(rng.next_below(4)), std::move(children));
}

}  // namespace

TEST_CASE("crossing is partial overlap without containment") {
  CHECK(crossing(Span{0, 4}, Span{2, 8}));
  CHECK(crossing(Span{2, 8}, Span{0, 4}));
  CHECK_FALSE(crossing(Span{0, 5}, Span{1, 3}));  // nested
  CHECK_FALSE(crossing(Span{0, 2}, Span{0, 2}));  // identical
  CHECK_FALSE(crossing(Span{0, 2}, Span{2, 4}));  // adjacent
  CHECK_FALSE(crossing(Span{0, 2}, Span{3, 5}));  // disjoint
}

TEST_CASE("parses single-line bracketed trees") {
  const Treebank tb = parse_bracketed_text("(S (X1 a dual carrier))\n");
  REQUIRE(tb.size() == 1);
  CHECK(tb[0] == node("S", {node("X1", {leaf("a"), leaf("dual"), leaf("carrier")})}));
}

TEST_CASE("parses a mixed node with tokens and a nested constituent") {
  const Treebank tb =
      parse_bracketed_text("(TOP What is (X1 a dual carrier))\n");
  REQUIRE(tb.size() == 1);
  const Tree& t = tb[0];
  CHECK(leaf_count(t) == 5);
  REQUIRE(t.children.size() == 3);
  CHECK(t.children[0] == leaf("What"));
  CHECK(t.children[2].label == "X1");
  CHECK(brackets_of(t) == std::set<Span>{{0, 5}, {2, 5}});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_bracketed_text("(S (X1 a) (X1\n"),
                       "line 1: unbalanced parentheses", ParseError);
  CHECK_THROWS_AS(parse_bracketed_text("(S a))\n"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_text("(S ())\n"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_text("(S ((X a)))\n"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_text("(S)\n"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_text("just tokens\n"), ParseError);
  try {
    parse_bracketed_text("(S a)\n(S b))\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("strip reads off leaves and discards structure") {
  const auto corpus = strip(parse_bracketed_text("(S (NP a flight))\n"));
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0] == sent(0, {"a", "flight"}));

  const auto nested = strip(parse_bracketed_text("(S (NP (NP x)))\n"));
  CHECK(nested[0] == sent(0, {"x"}));

  const auto two = strip(
      parse_bracketed_text("(TOP What is (X1 a dual carrier))\n(S y z)\n"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].tokens ==
        std::vector<std::string>{"What", "is", "a", "dual", "carrier"});
  CHECK(two[1].id == 1);

  CHECK_THROWS_AS(strip(Treebank{}), InvalidArgument);
}

TEST_CASE("brackets_of collapses unary chains and keeps the root") {
  CHECK(brackets_of(parse_bracketed_text("(S (NP a flight))\n")[0]) ==
        std::set<Span>{{0, 2}});
  CHECK(brackets_of(parse_bracketed_text("(TOP (A a) (B b c))\n")[0]) ==
        std::set<Span>{{0, 3}, {0, 1}, {1, 3}});
  const Tree give = parse_bracketed_text(
      "(TOP Give me (X2 all flights from Dallas to Boston))\n")[0];
  CHECK(brackets_of(give).count(Span{2, 8}) == 1);
}

TEST_CASE("build_tree nests constituents and attaches tokens") {
  const Sentence s = sent(0, {"What", "is", "a", "dual", "carrier"});
  const Tree t = build_tree(s, {{{0, 5}, "TOP"}, {{2, 5}, "X1"}});
  CHECK(serialize(t) == "(TOP What is (X1 a dual carrier))");

  const Tree tiny = build_tree(sent(1, {"x"}), {{{0, 1}, "TOP"}});
  CHECK(serialize(tiny) == "(TOP x)");
}

TEST_CASE("build_tree rejects crossing and missing-root inputs") {
  const Sentence s = sent(0, {"a", "b", "c", "d"});
  CHECK_THROWS_AS(
      build_tree(s, {{{0, 4}, "TOP"}, {{0, 3}, "X1"}, {{2, 4}, "X2"}}),
      InvalidArgument);
  CHECK_THROWS_AS(build_tree(s, {{{0, 3}, "X1"}}), InvalidArgument);
  CHECK_THROWS_AS(build_tree(s, {{{0, 5}, "TOP"}}), InvalidArgument);
}

TEST_CASE("build_tree accepts same-label nesting and unary chains") {
  const Sentence s = sent(0, {"a", "b", "c", "d"});
  const Tree rec =
      build_tree(s, {{{0, 4}, "TOP"}, {{1, 4}, "X1"}, {{2, 4}, "X1"}});
  CHECK(serialize(rec) == "(TOP a (X1 b (X1 c d)))");

  // Identical spans become a unary chain, outer to inner in input order.
  const Tree chain =
      build_tree(s, {{{0, 4}, "TOP"}, {{1, 3}, "X2"}, {{1, 3}, "X1"}});
  CHECK(serialize(chain) == "(TOP a (X2 (X1 b c)) d)");
}

TEST_CASE("round-trip: parse of serialize is identity on random treebanks") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Treebank tb;
    const int trees = 1 + static_cast<int>(rng.next_below(4));
    for (int i = 0; i < trees; ++i) {
      Tree t = random_tree(rng);
      if (t.is_leaf()) t = node("S", {t});
      tb.push_back(std::move(t));
    }
    CHECK(parse_bracketed_text(serialize_text(tb)) == tb);
    // strip after parse sees exactly the leaf text
    const auto corpus = strip(tb);
    for (std::size_t i = 0; i < tb.size(); ++i)
      CHECK(corpus[i].tokens == leaves_of(tb[i]));
  }
}

TEST_CASE("build_tree then brackets_of recovers the span set") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int len = 1 + static_cast<int>(rng.next_below(8));
    std::vector<std::string> toks;
    for (int i = 0; i < len; ++i) toks.push_back("t" + std::to_string(i));
    const Sentence s = make_sentence(0, toks);

    // Grow a random non-crossing set containing the root span.
    std::vector<Constituent> cs = {{{0, len}, "TOP"}};
    std::set<Span> spans = {{0, len}};
    for (int tries = 0; tries < 10; ++tries) {
      const int b = static_cast<int>(rng.next_below(len));
      const int e = b + 1 + static_cast<int>(rng.next_below(len - b));
      const Span cand{b, e};
      bool ok = true;
      for (const Span& have : spans)
        if (crossing(have, cand)) ok = false;
      if (ok && spans.insert(cand).second)
        cs.push_back({cand, "X" + std::to_string(tries)});
    }
    const Tree t = build_tree(s, cs);
    CHECK(brackets_of(t) == spans);
    CHECK(leaves_of(t) == toks);
  }
}

TEST_CASE("brackets are always valid non-zero-width spans") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    Tree t = random_tree(rng);
    if (t.is_leaf()) t = node("S", {t});
    const int len = leaf_count(t);
    for (const Span& sp : brackets_of(t)) {
      CHECK(0 <= sp.begin);
      CHECK(sp.begin < sp.end);
      CHECK(sp.end <= len);
    }
  }
}

TEST_CASE("plain corpus reader enforces format") {
  const auto corpus = parse_plain_corpus("a b c\nd e\n");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0] == sent(0, {"a", "b", "c"}));
  CHECK(corpus[1] == sent(1, {"d", "e"}));
  CHECK(plain_corpus_text(corpus) == "a b c\nd e\n");

  CHECK_THROWS_AS(parse_plain_corpus("a b\n\nc d\n"), ParseError);
}

TEST_CASE("token and sentence invariants are validated") {
  CHECK(valid_token("carrier"));
  CHECK_FALSE(valid_token(""));
  CHECK_FALSE(valid_token("two words"));
  CHECK_THROWS_AS(make_sentence(0, {}), InvalidArgument);
  CHECK_THROWS_AS(make_sentence(0, {""}), InvalidArgument);
}
