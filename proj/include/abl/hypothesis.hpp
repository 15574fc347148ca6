#ifndef ABL_HYPOTHESIS_HPP
#define ABL_HYPOTHESIS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "abl/corpus.hpp"

namespace abl {

// Non-terminal identifier. Label 0 is reserved for the sentence/root type;
// it is the canonical representative of any class it ends up in.
using LabelId = int;
inline constexpr LabelId kRootLabel = 0;

// One hypothesized constituent: a labeled span of a sentence.
struct Hypothesis {
  int sentence = 0;
  Span span;
  LabelId label = kRootLabel;

  auto operator<=>(const Hypothesis&) const = default;
};

// Union-find over label ids. The canonical representative of a class is its
// smallest id, so the root label can absorb other classes but never loses
// its identity.
class LabelRegistry {
 public:
  LabelRegistry() { parent_.push_back(kRootLabel); }

  LabelId fresh() {
    parent_.push_back(static_cast<LabelId>(parent_.size()));
    return parent_.back();
  }

  // Canonical representative; resolve(resolve(l)) == resolve(l).
  LabelId resolve(LabelId l) const;

  // Returns true if two distinct classes were joined.
  bool merge(LabelId a, LabelId b);

  int issued() const { return static_cast<int>(parent_.size()); }
  int num_classes() const;

 private:
  mutable std::vector<LabelId> parent_;
};

// Aggregated occurrence counts over all stored hypotheses.
struct StoreCounts {
  long total = 0;  // |C|
  std::unordered_map<std::string, long> by_yield;
  std::unordered_map<std::string, long> by_yield_label;
  std::unordered_map<LabelId, long> by_label;
};

// Token sequence under a span, space-joined (tokens contain no spaces).
std::string yield_key(const Sentence& s, Span span);
std::string yield_label_key(LabelId canonical_label, const std::string& yield);

// Per-sentence hypothesis sets plus the shared label registry. Every sentence
// starts with the implicit root hypothesis over its full span. At most one
// hypothesis is stored per (sentence, span); a clash of labels on the same
// span merges the label classes instead.
class HypothesisStore {
 public:
  // The store keeps its own copy of the corpus, in the given order. In
  // incremental mode a submitted span that crosses an already stored span of
  // its sentence is dropped.
  HypothesisStore(std::vector<Sentence> corpus, bool incremental);

  // Label resolution for a distinct pair: if neither span is known, both get
  // one fresh label; if exactly one is known, the other adopts its canonical
  // label; if both are known with different canonical labels, the classes
  // are merged. Storage of an unknown side is subject to the incremental
  // filter.
  void submit_pair(int sentence1, Span span1, int sentence2, Span span2);

  LabelId resolve(LabelId l) const { return registry_.resolve(l); }
  const LabelRegistry& registry() const { return registry_; }

  // All hypotheses of a sentence, labels canonicalized, sorted outer-first
  // (begin ascending, end descending). Includes the root hypothesis.
  std::vector<Hypothesis> hypotheses_of(int sentence_id) const;

  StoreCounts counts() const;

  const std::vector<Sentence>& corpus() const { return corpus_; }
  const Sentence& sentence(int sentence_id) const;
  bool incremental() const { return incremental_; }
  long size() const;  // |C|

  // Debug dump, one hypothesis per line: `sentence_id begin end label`.
  void dump(std::ostream& out) const;

 private:
  int index_of(int sentence_id) const;
  void store_if_allowed(int index, Span span, LabelId label);

  std::vector<Sentence> corpus_;
  std::unordered_map<int, int> index_by_id_;
  std::vector<std::map<Span, LabelId>> hyps_;  // by corpus index
  LabelRegistry registry_;
  bool incremental_;
};

}  // namespace abl

#endif  // ABL_HYPOTHESIS_HPP
