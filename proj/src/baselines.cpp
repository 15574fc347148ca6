#include "abl/baselines.hpp"

#include "abl/error.hpp"

namespace abl {

Tree branch_tree(const Sentence& s, Direction direction) {
  const auto& toks = s.tokens;
  if (toks.empty()) throw InvalidArgument("empty sentence");
  const int n = static_cast<int>(toks.size());
  if (n == 1) return node(kBaselineLabel, {leaf(toks[0])});

  if (direction == Direction::kRight) {
    Tree t = node(kBaselineLabel, {leaf(toks[n - 2]), leaf(toks[n - 1])});
    for (int i = n - 3; i >= 0; --i)
      t = node(kBaselineLabel, {leaf(toks[i]), std::move(t)});
    return t;
  }
  Tree t = node(kBaselineLabel, {leaf(toks[0]), leaf(toks[1])});
  for (int i = 2; i < n; ++i)
    t = node(kBaselineLabel, {std::move(t), leaf(toks[i])});
  return t;
}

}  // namespace abl
