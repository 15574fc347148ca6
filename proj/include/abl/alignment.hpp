#ifndef ABL_ALIGNMENT_HPP
#define ABL_ALIGNMENT_HPP

#include <vector>

#include "abl/corpus.hpp"
#include "abl/hypothesis.hpp"

namespace abl {

// One aligned token position pair.
struct LinkPair {
  int pos1 = 0;
  int pos2 = 0;

  auto operator<=>(const LinkPair&) const = default;
};

// Links are strictly increasing in both coordinates and connect equal tokens.
using Alignment = std::vector<LinkPair>;

// Paired distinct parts of two aligned sentences; both sides non-empty.
struct DistinctPair {
  Span span1;
  Span span2;

  bool operator==(const DistinctPair&) const = default;
};

// Maximum-length common subsequence of the two token sequences. Among the
// equal-length solutions returns the one whose link sequence is
// lexicographically smallest by (pos1, pos2).
Alignment lcs_align(const Sentence& s1, const Sentence& s2);

// The maximal gaps between consecutive links (including before the first and
// after the last link), paired positionally; gaps with an empty side are
// dropped. An empty alignment yields one pair covering both full sentences.
std::vector<DistinctPair> distinct_pairs(const Alignment& alignment,
                                         const Sentence& s1,
                                         const Sentence& s2);

// Aligns every unordered sentence pair of the store's corpus and submits the
// distinct pairs: outer index ascending, inner index ascending over the
// preceding sentences, so each new sentence is compared against all earlier
// ones. Alignment looks only at tokens, never at stored hypotheses.
void align_all(HypothesisStore& store);

}  // namespace abl

#endif  // ABL_ALIGNMENT_HPP
