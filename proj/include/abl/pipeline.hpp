#ifndef ABL_PIPELINE_HPP
#define ABL_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abl/baselines.hpp"
#include "abl/corpus.hpp"
#include "abl/evaluation.hpp"

namespace abl {

enum class Method { kIncr, kLeaf, kBranch, kLeft, kRight };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct RunConfig {
  Method method = Method::kBranch;
  int runs = 1;
  uint64_t seed = 0;
  int min_len = 1;  // sentences with fewer tokens are dropped, gold likewise
  std::string corpus_path;
  std::string gold_path;  // empty: no evaluation
  std::string out_dir;
};

struct ExperimentResult {
  std::vector<MetricsReport> reports;  // one per run, empty without gold
  RunAggregate aggregate;              // valid iff evaluated
  bool evaluated = false;
  std::vector<std::string> outputs;  // written treebank paths, one per run
};

// One full learn-and-select pass over the corpus in its given order. Method
// must be kIncr, kLeaf or kBranch. Output trees use label TOP for the root
// class and X1, X2, ... for the others, numbered in first-use order.
Treebank learn(const std::vector<Sentence>& corpus, Method method,
               uint64_t seed);

Treebank baseline_treebank(const std::vector<Sentence>& corpus, Direction d);

// Full experiment protocol. Incremental runs shuffle the sentence order with
// a stream derived from (seed, run index) and restore the original order in
// the output; leaf/branch runs keep the corpus order fixed and derive the
// tie-break streams from (seed, run index); left/right is a single
// deterministic run. Writes run_<k>.br per run and report.txt (when a gold
// treebank is given) under out_dir.
ExperimentResult run_experiment(const RunConfig& cfg);

}  // namespace abl

#endif  // ABL_PIPELINE_HPP
