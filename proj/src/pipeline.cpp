#include "abl/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <unordered_map>

#include "abl/alignment.hpp"
#include "abl/error.hpp"
#include "abl/rng.hpp"
#include "abl/selection.hpp"

namespace abl {

Method parse_method(const std::string& name) {
  if (name == "incr") return Method::kIncr;
  if (name == "leaf") return Method::kLeaf;
  if (name == "branch") return Method::kBranch;
  if (name == "left") return Method::kLeft;
  if (name == "right") return Method::kRight;
  throw InvalidArgument("unknown method '" + name +
                        "' (expected incr, leaf, branch, left or right)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kIncr: return "incr";
    case Method::kLeaf: return "leaf";
    case Method::kBranch: return "branch";
    case Method::kLeft: return "left";
    case Method::kRight: return "right";
  }
  return "?";
}

namespace {

constexpr const char* kRootName = "TOP";

SelectionMethod to_selection(Method m) {
  switch (m) {
    case Method::kIncr: return SelectionMethod::kIncr;
    case Method::kLeaf: return SelectionMethod::kLeaf;
    case Method::kBranch: return SelectionMethod::kBranch;
    default:
      throw InvalidArgument("method '" + method_name(m) + "' does not learn");
  }
}

// Maps canonical label ids to output names: TOP for the root class, then
// X1, X2, ... in first-use order.
class LabelNamer {
 public:
  std::string name(LabelId canonical) {
    if (canonical == kRootLabel) return kRootName;
    auto [it, fresh] = names_.emplace(canonical, "");
    if (fresh) it->second = "X" + std::to_string(next_++);
    return it->second;
  }

 private:
  std::unordered_map<LabelId, std::string> names_;
  int next_ = 1;
};

// Assembles the output treebank in the order of `corpus`, regardless of the
// order learning processed the sentences in.
Treebank assemble(const std::vector<Sentence>& corpus,
                  const std::unordered_map<int, SelectionResult>& by_id) {
  LabelNamer namer;
  Treebank tb;
  tb.reserve(corpus.size());
  for (const Sentence& s : corpus) {
    const SelectionResult& r = by_id.at(s.id);
    std::vector<Constituent> constituents;
    constituents.reserve(r.chosen.size());
    for (const Hypothesis& h : r.chosen)  // already outer-first
      constituents.push_back(Constituent{h.span, namer.name(h.label)});
    tb.push_back(build_tree(s, constituents));
  }
  return tb;
}

std::unordered_map<int, SelectionResult> learn_select(
    std::vector<Sentence> corpus, Method method, uint64_t seed) {
  HypothesisStore store(std::move(corpus), method == Method::kIncr);
  align_all(store);
  std::unordered_map<int, SelectionResult> by_id;
  for (SelectionResult& r : select_corpus(store, to_selection(method), seed))
    by_id.emplace(r.sentence, std::move(r));
  return by_id;
}

}  // namespace

Treebank learn(const std::vector<Sentence>& corpus, Method method,
               uint64_t seed) {
  return assemble(corpus, learn_select(corpus, method, seed));
}

Treebank baseline_treebank(const std::vector<Sentence>& corpus, Direction d) {
  Treebank tb;
  tb.reserve(corpus.size());
  for (const Sentence& s : corpus) tb.push_back(branch_tree(s, d));
  return tb;
}

ExperimentResult run_experiment(const RunConfig& cfg) {
  if (cfg.runs < 1) throw InvalidArgument("runs must be at least 1");
  if (cfg.out_dir.empty()) throw InvalidArgument("output directory required");

  std::vector<Sentence> corpus = load_plain_corpus(cfg.corpus_path);
  Treebank gold;
  const bool have_gold = !cfg.gold_path.empty();
  if (have_gold) {
    gold = load_treebank(cfg.gold_path);
    if (gold.size() != corpus.size())
      throw MismatchError("corpus has " + std::to_string(corpus.size()) +
                          " sentences but gold treebank has " +
                          std::to_string(gold.size()) + " trees");
  }

  if (cfg.min_len > 1) {
    std::vector<Sentence> kept;
    Treebank kept_gold;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (static_cast<int>(corpus[i].tokens.size()) < cfg.min_len) continue;
      Sentence s = corpus[i];
      s.id = static_cast<int>(kept.size());
      kept.push_back(std::move(s));
      if (have_gold) kept_gold.push_back(gold[i]);
    }
    corpus = std::move(kept);
    gold = std::move(kept_gold);
  }
  if (corpus.empty())
    throw InvalidArgument("no sentences left after length filtering");

  std::filesystem::create_directories(cfg.out_dir);

  const bool is_baseline =
      cfg.method == Method::kLeft || cfg.method == Method::kRight;
  const int runs = is_baseline ? 1 : cfg.runs;

  // Leaf/branch keep the corpus order fixed, so one alignment pass serves
  // all runs; only the tie-break streams differ.
  std::unique_ptr<HypothesisStore> shared_store;
  if (cfg.method == Method::kLeaf || cfg.method == Method::kBranch) {
    shared_store = std::make_unique<HypothesisStore>(corpus, false);
    align_all(*shared_store);
  }

  ExperimentResult result;
  for (int k = 0; k < runs; ++k) {
    const uint64_t run_seed = mix_seed(cfg.seed, static_cast<uint64_t>(k));
    Treebank tb;
    switch (cfg.method) {
      case Method::kLeft:
        tb = baseline_treebank(corpus, Direction::kLeft);
        break;
      case Method::kRight:
        tb = baseline_treebank(corpus, Direction::kRight);
        break;
      case Method::kIncr: {
        std::vector<Sentence> shuffled = corpus;
        SplitMix64 rng(run_seed);
        shuffle(shuffled, rng);
        tb = assemble(corpus, learn_select(std::move(shuffled), Method::kIncr,
                                           run_seed));
        break;
      }
      case Method::kLeaf:
      case Method::kBranch: {
        std::unordered_map<int, SelectionResult> by_id;
        for (SelectionResult& r :
             select_corpus(*shared_store, to_selection(cfg.method), run_seed))
          by_id.emplace(r.sentence, std::move(r));
        tb = assemble(corpus, by_id);
        break;
      }
    }
    const std::string path =
        (std::filesystem::path(cfg.out_dir) / ("run_" + std::to_string(k) + ".br"))
            .string();
    save_treebank(tb, path);
    result.outputs.push_back(path);
    if (have_gold) result.reports.push_back(evaluate(tb, gold));
  }

  if (have_gold) {
    result.aggregate = aggregate(result.reports);
    result.evaluated = true;
    const std::string report_path =
        (std::filesystem::path(cfg.out_dir) / "report.txt").string();
    std::ofstream out(report_path);
    if (!out) throw IoError("cannot write report file: " + report_path);
    out << format_report(result.aggregate);
    out << "method=" << method_name(cfg.method) << "\n";
    out << "seed=" << cfg.seed << "\n";
    out << "min_len=" << cfg.min_len << "\n";
  }
  return result;
}

}  // namespace abl
