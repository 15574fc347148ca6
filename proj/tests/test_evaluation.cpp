#include <doctest.h>

#include "abl/baselines.hpp"
#include "abl/error.hpp"
#include "abl/evaluation.hpp"
#include "abl/rng.hpp"
#include "support/oracles.hpp"

using namespace abl;

TEST_CASE("self-evaluation scores 100 everywhere") {
  const Treebank tb = parse_bracketed_text(
      "(TOP What is (X1 a dual carrier))\n(S (A a) (B b c))\n(S x)\n");
  const MetricsReport r = evaluate(tb, tb);
  CHECK(r.ncbp == doctest::Approx(100.0));
  CHECK(r.ncbr == doctest::Approx(100.0));
  CHECK(r.zcs == doctest::Approx(100.0));
}

TEST_CASE("one crossing bracket on each side gives 50/50/0") {
  // learned brackets {(0,4),(0,3)}, gold {(0,4),(2,4)}: (0,3) crosses (2,4)
  const Treebank learned = parse_bracketed_text("(T (A a b c) d)\n");
  const Treebank gold = parse_bracketed_text("(T a b (B c d))\n");
  const MetricsReport r = evaluate(learned, gold);
  CHECK(r.ncbp == doctest::Approx(50.0));
  CHECK(r.ncbr == doctest::Approx(50.0));
  CHECK(r.zcs == doctest::Approx(0.0));
  REQUIRE(r.per_sentence.size() == 1);
  CHECK(r.per_sentence[0].learned_crossing == 1);
  CHECK(r.per_sentence[0].gold_crossing == 1);
}

TEST_CASE("right-branching scored against left-branching on three tokens") {
  const Sentence s = make_sentence(0, {"a", "b", "c"});
  const Treebank learned = {branch_tree(s, Direction::kRight)};
  const Treebank gold = {branch_tree(s, Direction::kLeft)};
  const MetricsReport r = evaluate(learned, gold);
  CHECK(r.ncbp == doctest::Approx(50.0));
  CHECK(r.ncbr == doctest::Approx(50.0));
  CHECK(r.zcs == doctest::Approx(0.0));
}

TEST_CASE("mismatches name the first offending sentence") {
  const Treebank two = parse_bracketed_text("(S a b)\n(S c d)\n");
  const Treebank one = parse_bracketed_text("(S a b)\n");
  CHECK_THROWS_AS(evaluate(two, one), MismatchError);
  CHECK_THROWS_AS(evaluate(Treebank{}, Treebank{}), InvalidArgument);

  const Treebank other = parse_bracketed_text("(S a b)\n(S c DIFFERENT)\n");
  CHECK_THROWS_WITH_AS(evaluate(two, other), "token mismatch at sentence 1",
                       MismatchError);
}

TEST_CASE("crossing counts are symmetric, so ZCS is direction-free") {
  SplitMix64 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const int len = 3 + static_cast<int>(rng.next_below(8));
    auto random_spanset = [&] {
      std::set<Span> spans = {{0, len}};
      for (int t = 0; t < 6; ++t) {
        const int b = static_cast<int>(rng.next_below(len));
        spans.insert(Span{b, b + 1 + static_cast<int>(rng.next_below(len - b))});
      }
      return spans;
    };
    const auto u = random_spanset();
    const auto v = random_spanset();
    for (const Span& a : u)
      for (const Span& b : v) CHECK(crossing(a, b) == crossing(b, a));
  }
}

TEST_CASE("swapping the arguments swaps precision and recall") {
  const Treebank a = parse_bracketed_text("(T (A a b c) d)\n(S (P x y) z)\n");
  const Treebank b = parse_bracketed_text("(T a b (B c d))\n(S x (Q y z))\n");
  const MetricsReport ab = evaluate(a, b);
  const MetricsReport ba = evaluate(b, a);
  CHECK(ab.ncbp == doctest::Approx(ba.ncbr));
  CHECK(ab.ncbr == doctest::Approx(ba.ncbp));
  CHECK(ab.zcs == doctest::Approx(ba.zcs));
}

TEST_CASE("metrics ignore non-terminal labels") {
  const Treebank gold = parse_bracketed_text("(T a b (B c d))\n");
  const Treebank v1 = parse_bracketed_text("(T (A a b c) d)\n");
  const Treebank v2 = parse_bracketed_text("(ZZZ (QQQ a b c) d)\n");
  const MetricsReport r1 = evaluate(v1, gold);
  const MetricsReport r2 = evaluate(v2, gold);
  CHECK(r1.ncbp == r2.ncbp);
  CHECK(r1.ncbr == r2.ncbr);
  CHECK(r1.zcs == r2.zcs);
}

TEST_CASE("adding a non-crossing learned bracket never hurts NCBR or ZCS") {
  const Treebank gold = parse_bracketed_text("(T a b (B c d) e)\n");
  const Treebank learned = parse_bracketed_text("(T (A a b) c d e)\n");
  const Treebank more = parse_bracketed_text("(T (A a b) (C c d e))\n");
  const MetricsReport base = evaluate(learned, gold);
  const MetricsReport grown = evaluate(more, gold);
  CHECK(grown.ncbr >= base.ncbr);
  CHECK(grown.zcs == base.zcs);
}

TEST_CASE("aggregate computes mean and sample standard deviation") {
  MetricsReport a, b;
  a.ncbp = 82.0;
  a.ncbr = 80.0;
  a.zcs = 10.0;
  b.ncbp = 84.0;
  b.ncbr = 90.0;
  b.zcs = 30.0;
  const RunAggregate agg = aggregate({a, b});
  CHECK(agg.runs == 2);
  CHECK(agg.ncbp.mean == doctest::Approx(83.0));
  CHECK(agg.ncbp.stddev == doctest::Approx(std::sqrt(2.0)));
  CHECK(agg.ncbr.mean == doctest::Approx(85.0));
  CHECK(agg.zcs.stddev == doctest::Approx(std::sqrt(200.0)));

  const RunAggregate single = aggregate({a});
  CHECK(single.ncbp.mean == 82.0);
  CHECK(single.ncbp.stddev == 0.0);

  const RunAggregate ten = aggregate(std::vector<MetricsReport>(10, a));
  CHECK(ten.ncbp.stddev == doctest::Approx(0.0));

  CHECK_THROWS_AS(aggregate({}), InvalidArgument);
}

TEST_CASE("report formatting is stable and two-decimal") {
  MetricsReport r;
  r.ncbp = 50.0;
  r.ncbr = 50.0;
  r.zcs = 0.0;
  CHECK(format_report(r) ==
        "NCBP    NCBR    ZCS\n"
        "50.00   50.00   0.00\n"
        "ncbp=50.00\nncbr=50.00\nzcs=0.00\n");

  MetricsReport a, b;
  a.ncbp = a.ncbr = a.zcs = 82.0;
  b.ncbp = b.ncbr = b.zcs = 84.0;
  const std::string text = format_report(aggregate({a, b}));
  CHECK(text.find("83.00 (1.41)") != std::string::npos);
  CHECK(text.find("ncbp_mean=83.00") != std::string::npos);
  CHECK(text.find("ncbp_stddev=1.41") != std::string::npos);
}
