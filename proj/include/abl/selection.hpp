#ifndef ABL_SELECTION_HPP
#define ABL_SELECTION_HPP

#include <cstdint>
#include <vector>

#include "abl/hypothesis.hpp"
#include "abl/rng.hpp"

namespace abl {

// Relative tolerance on the log objective below which two combinations count
// as tied (ties are then broken uniformly at random).
inline constexpr double kSelectionTieTolerance = 1e-12;

enum class SelectionMethod { kIncr, kLeaf, kBranch };

struct ScoredHypothesis {
  Hypothesis hyp;
  double p = 1.0;  // in (0, 1]
};

struct SelectionResult {
  int sentence = 0;
  // Pairwise non-crossing and maximal; always contains the root hypothesis;
  // sorted outer-first (begin ascending, end descending).
  std::vector<Hypothesis> chosen;
  // Geometric mean of the chosen probabilities; 1 when no probability model
  // applies (incremental pass-through).
  double objective = 1.0;
};

// Occurrence probability of a hypothesis: count of stored hypotheses with the
// same yield, over the total number of stored hypotheses.
double p_leaf(const Hypothesis& c, const HypothesisStore& store,
              const StoreCounts& counts);

// Count of stored hypotheses with the same yield and the same canonical
// label, over the count of hypotheses with that label.
double p_branch(const Hypothesis& c, const HypothesisStore& store,
                const StoreCounts& counts);

// Among all maximal pairwise-non-crossing subsets of `hypotheses`, returns
// one that maximizes the geometric mean of the probabilities. The search is
// exact: non-crossing maximality factorizes over connected components of the
// crossing-conflict graph, and a per-cardinality best-log-sum table combines
// the components. Ties within tolerance are broken uniformly at random.
SelectionResult select(const std::vector<ScoredHypothesis>& hypotheses,
                       SplitMix64& rng);

// Applies selection to every sentence of the store. For kIncr the store must
// have been built incrementally and the stored sets are returned verbatim;
// for kLeaf/kBranch the store must hold the full overlapping hypothesis set.
// Each sentence draws from its own random stream: mix_seed(seed, sentence id).
std::vector<SelectionResult> select_corpus(const HypothesisStore& store,
                                           SelectionMethod method,
                                           uint64_t seed);

}  // namespace abl

#endif  // ABL_SELECTION_HPP
