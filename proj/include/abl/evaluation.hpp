#ifndef ABL_EVALUATION_HPP
#define ABL_EVALUATION_HPP

#include <string>
#include <vector>

#include "abl/corpus.hpp"

namespace abl {

struct SentenceCrossings {
  int learned_brackets = 0;
  int gold_brackets = 0;
  int learned_crossing = 0;  // learned brackets crossing some gold bracket
  int gold_crossing = 0;     // gold brackets crossing some learned bracket
};

// Non-crossing bracket scores, in percent.
struct MetricsReport {
  double ncbp = 0;  // learned brackets that cross no gold bracket
  double ncbr = 0;  // gold brackets that cross no learned bracket
  double zcs = 0;   // sentences without any crossing
  std::vector<SentenceCrossings> per_sentence;
};

struct MetricStats {
  double mean = 0;
  double stddev = 0;  // sample standard deviation (n-1); 0 for a single run
};

struct RunAggregate {
  MetricStats ncbp, ncbr, zcs;
  int runs = 0;
};

// Scores a learned treebank against the original one. Both must have the
// same number of trees and identical token sequences per tree; a violation
// raises MismatchError naming the first offending sentence index.
MetricsReport evaluate(const Treebank& learned, const Treebank& gold);

// Arithmetic mean and sample standard deviation per metric.
RunAggregate aggregate(const std::vector<MetricsReport>& reports);

// Plain-text table plus machine-readable key-value lines; values are printed
// with two decimals, stddev in brackets for aggregates.
std::string format_report(const MetricsReport& report);
std::string format_report(const RunAggregate& agg);

}  // namespace abl

#endif  // ABL_EVALUATION_HPP
