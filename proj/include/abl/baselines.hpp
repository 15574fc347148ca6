#ifndef ABL_BASELINES_HPP
#define ABL_BASELINES_HPP

#include "abl/corpus.hpp"

namespace abl {

enum class Direction { kLeft, kRight };

inline constexpr const char* kBaselineLabel = "B";

// Degenerate binary tree nesting strictly toward one end of the sentence.
// Right: brackets {(i, n) : 0 <= i <= n-2} plus the root; left is the mirror.
// A one-token sentence yields a single node.
Tree branch_tree(const Sentence& s, Direction direction);

}  // namespace abl

#endif  // ABL_BASELINES_HPP
