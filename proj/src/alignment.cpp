#include "abl/alignment.hpp"

#include <algorithm>

#include "abl/error.hpp"

namespace abl {

Alignment lcs_align(const Sentence& s1, const Sentence& s2) {
  const auto& a = s1.tokens;
  const auto& b = s2.tokens;
  if (a.empty() || b.empty())
    throw InvalidArgument("lcs_align requires non-empty sentences");
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());

  // suffix[i][j] = LCS length of a[i:], b[j:]
  std::vector<std::vector<int>> suffix(n + 1, std::vector<int>(m + 1, 0));
  for (int i = n - 1; i >= 0; --i)
    for (int j = m - 1; j >= 0; --j) {
      int best = std::max(suffix[i + 1][j], suffix[i][j + 1]);
      if (a[i] == b[j]) best = std::max(best, 1 + suffix[i + 1][j + 1]);
      suffix[i][j] = best;
    }

  // Greedy reconstruction: repeatedly take the lexicographically smallest
  // next link that still completes a maximum-length subsequence.
  Alignment links;
  links.reserve(suffix[0][0]);
  int i = 0, j = 0;
  for (int remaining = suffix[0][0]; remaining > 0; --remaining) {
    bool found = false;
    for (int i2 = i; i2 < n && !found; ++i2)
      for (int j2 = j; j2 < m && !found; ++j2)
        if (a[i2] == b[j2] && 1 + suffix[i2 + 1][j2 + 1] == remaining) {
          links.push_back(LinkPair{i2, j2});
          i = i2 + 1;
          j = j2 + 1;
          found = true;
        }
  }
  return links;
}

std::vector<DistinctPair> distinct_pairs(const Alignment& alignment,
                                         const Sentence& s1,
                                         const Sentence& s2) {
  const int n = static_cast<int>(s1.tokens.size());
  const int m = static_cast<int>(s2.tokens.size());
  int prev1 = -1, prev2 = -1;
  for (const LinkPair& l : alignment) {
    if (l.pos1 <= prev1 || l.pos2 <= prev2 || l.pos1 >= n || l.pos2 >= m)
      throw InvalidArgument("alignment links are not strictly increasing");
    if (s1.tokens[l.pos1] != s2.tokens[l.pos2])
      throw InvalidArgument("alignment links unequal tokens");
    prev1 = l.pos1;
    prev2 = l.pos2;
  }

  std::vector<DistinctPair> out;
  prev1 = prev2 = -1;
  auto flush = [&](int b1, int e1, int b2, int e2) {
    if (b1 < e1 && b2 < e2)
      out.push_back(DistinctPair{Span{b1, e1}, Span{b2, e2}});
  };
  for (const LinkPair& l : alignment) {
    flush(prev1 + 1, l.pos1, prev2 + 1, l.pos2);
    prev1 = l.pos1;
    prev2 = l.pos2;
  }
  flush(prev1 + 1, n, prev2 + 1, m);
  return out;
}

void align_all(HypothesisStore& store) {
  const auto& corpus = store.corpus();
  for (std::size_t j = 1; j < corpus.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Sentence& a = corpus[i];
      const Sentence& b = corpus[j];
      const Alignment al = lcs_align(a, b);
      for (const DistinctPair& d : distinct_pairs(al, a, b))
        store.submit_pair(a.id, d.span1, b.id, d.span2);
    }
}

}  // namespace abl
