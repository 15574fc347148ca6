#include "abl/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abl/error.hpp"

namespace abl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool near_log(double a, double b) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kSelectionTieTolerance * scale;
}

// One maximal independent set of a conflict component.
struct MisOption {
  std::vector<int> members;  // vertex indices into the full hypothesis list
  int size = 0;
  double logsum = 0;
};

// Enumerates all maximal independent sets of the crossing graph restricted
// to one component: Bron-Kerbosch with pivoting on the complement graph
// (maximal cliques of the complement are exactly the maximal independent
// sets). Exponential in the worst case, which is the price of exactness;
// conflict components stay small on corpus-scale inputs.
class MisEnumerator {
 public:
  MisEnumerator(const std::vector<int>& vertices,
                const std::vector<std::vector<char>>& cross)
      : vertices_(vertices), cross_(cross) {}

  std::vector<std::vector<int>> run() {
    rec({}, vertices_, {});
    return std::move(out_);
  }

 private:
  bool compatible(int u, int v) const { return u != v && !cross_[u][v]; }

  void rec(std::vector<int> r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      out_.push_back(std::move(r));
      return;
    }
    int pivot = -1, best = -1;
    for (const auto* side : {&p, &x})
      for (int u : *side) {
        int count = 0;
        for (int v : p) count += compatible(u, v);
        if (count > best) {
          best = count;
          pivot = u;
        }
      }
    std::vector<int> ext;
    for (int v : p)
      if (!compatible(pivot, v)) ext.push_back(v);
    for (int v : ext) {
      std::vector<int> r2 = r;
      r2.push_back(v);
      std::vector<int> p2, x2;
      for (int w : p)
        if (compatible(v, w)) p2.push_back(w);
      for (int w : x)
        if (compatible(v, w)) x2.push_back(w);
      rec(std::move(r2), std::move(p2), std::move(x2));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const std::vector<int>& vertices_;
  const std::vector<std::vector<char>>& cross_;
  std::vector<std::vector<int>> out_;
};

struct DpCell {
  double logsum = kNegInf;
  double ways = 0;  // number of combinations achieving logsum (within tol)
};

}  // namespace

double p_leaf(const Hypothesis& c, const HypothesisStore& store,
              const StoreCounts& counts) {
  const std::string yield = yield_key(store.sentence(c.sentence), c.span);
  auto it = counts.by_yield.find(yield);
  if (it == counts.by_yield.end() || counts.total == 0)
    throw InvalidArgument("hypothesis not covered by counts");
  return static_cast<double>(it->second) / static_cast<double>(counts.total);
}

double p_branch(const Hypothesis& c, const HypothesisStore& store,
                const StoreCounts& counts) {
  const LabelId root = store.resolve(c.label);
  const std::string yield = yield_key(store.sentence(c.sentence), c.span);
  auto num = counts.by_yield_label.find(yield_label_key(root, yield));
  auto den = counts.by_label.find(root);
  if (num == counts.by_yield_label.end() || den == counts.by_label.end())
    throw InvalidArgument("hypothesis not covered by counts");
  return static_cast<double>(num->second) / static_cast<double>(den->second);
}

SelectionResult select(const std::vector<ScoredHypothesis>& hypotheses,
                       SplitMix64& rng) {
  const int n = static_cast<int>(hypotheses.size());
  if (n == 0) throw InvalidArgument("select requires at least one hypothesis");
  const int sentence = hypotheses[0].hyp.sentence;
  for (const ScoredHypothesis& h : hypotheses) {
    if (h.hyp.sentence != sentence)
      throw InvalidArgument("select got hypotheses of several sentences");
    if (!(h.p > 0.0) || h.p > 1.0)
      throw InvalidArgument("hypothesis probability outside (0, 1]");
  }

  std::vector<std::vector<char>> cross(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (crossing(hypotheses[i].hyp.span, hypotheses[j].hyp.span))
        cross[i][j] = cross[j][i] = 1;

  // Hypotheses that cross nothing are in every maximal set (the root always
  // is). The rest splits into connected conflict components.
  std::vector<int> forced;
  std::vector<int> component_of(n, -1);
  std::vector<std::vector<int>> components;
  for (int i = 0; i < n; ++i) {
    bool conflicted = false;
    for (int j = 0; j < n && !conflicted; ++j) conflicted = cross[i][j];
    if (!conflicted) {
      forced.push_back(i);
      continue;
    }
    if (component_of[i] >= 0) continue;
    std::vector<int> comp, queue{i};
    component_of[i] = static_cast<int>(components.size());
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      comp.push_back(u);
      for (int v = 0; v < n; ++v)
        if (cross[u][v] && component_of[v] < 0) {
          component_of[v] = component_of[i];
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }

  double forced_logsum = 0;
  for (int i : forced) forced_logsum += std::log(hypotheses[i].p);
  const int forced_count = static_cast<int>(forced.size());

  // Options per component: every maximal independent set, with its
  // cardinality and log-probability sum.
  std::vector<std::vector<MisOption>> options;
  int max_extra = 0;
  for (const auto& comp : components) {
    std::vector<MisOption> opts;
    for (auto& members : MisEnumerator(comp, cross).run()) {
      std::sort(members.begin(), members.end());
      MisOption o;
      o.size = static_cast<int>(members.size());
      for (int v : members) o.logsum += std::log(hypotheses[v].p);
      o.members = std::move(members);
      opts.push_back(std::move(o));
    }
    std::sort(opts.begin(), opts.end(),
              [](const MisOption& a, const MisOption& b) {
                return a.members < b.members;
              });
    max_extra += static_cast<int>(comp.size());
    options.push_back(std::move(opts));
  }

  // Per-cardinality best log-sum across components, with the number of ways
  // each best is achieved. Kept layer by layer for the sampling backtrack.
  std::vector<std::vector<DpCell>> layers;
  layers.emplace_back(max_extra + 1);
  layers[0][0] = DpCell{0.0, 1.0};
  for (const auto& opts : options) {
    const auto& prev = layers.back();
    std::vector<DpCell> next(max_extra + 1);
    for (int k = 0; k <= max_extra; ++k) {
      if (prev[k].ways == 0) continue;
      for (const MisOption& o : opts) {
        const int k2 = k + o.size;
        const double w = prev[k].logsum + o.logsum;
        DpCell& cell = next[k2];
        if (cell.ways == 0 || (!near_log(w, cell.logsum) && w > cell.logsum)) {
          cell.logsum = w;
          cell.ways = prev[k].ways;
        } else if (near_log(w, cell.logsum)) {
          cell.logsum = std::max(cell.logsum, w);
          cell.ways += prev[k].ways;
        }
      }
    }
    layers.push_back(std::move(next));
  }

  // Best geometric mean over cardinalities; ties collect across counts.
  const auto& final_layer = layers.back();
  double best_obj = kNegInf;
  for (int k = 0; k <= max_extra; ++k) {
    if (final_layer[k].ways == 0 || forced_count + k == 0) continue;
    const double obj = (forced_logsum + final_layer[k].logsum) / (forced_count + k);
    if (obj > best_obj) best_obj = obj;
  }
  std::vector<int> tied_counts;
  double total_ways = 0;
  for (int k = 0; k <= max_extra; ++k) {
    if (final_layer[k].ways == 0 || forced_count + k == 0) continue;
    const double obj = (forced_logsum + final_layer[k].logsum) / (forced_count + k);
    if (near_log(obj, best_obj)) {
      tied_counts.push_back(k);
      total_ways += final_layer[k].ways;
    }
  }

  // Draw one optimum uniformly: first the cardinality, then an option per
  // component, weighted by the way counts of the remaining prefix.
  int pick_k = tied_counts.back();
  if (tied_counts.size() > 1 || total_ways > 1) {
    double r = rng.next_unit() * total_ways;
    for (int k : tied_counts) {
      r -= final_layer[k].ways;
      if (r < 0) {
        pick_k = k;
        break;
      }
    }
  }

  std::vector<int> chosen_idx = forced;
  int k_rem = pick_k;
  for (int ci = static_cast<int>(options.size()) - 1; ci >= 0; --ci) {
    const auto& prev = layers[ci];
    const DpCell& target = layers[ci + 1][k_rem];
    std::vector<const MisOption*> fits;
    double weight_total = 0;
    for (const MisOption& o : options[ci]) {
      if (o.size > k_rem) continue;
      const DpCell& cell = prev[k_rem - o.size];
      if (cell.ways == 0) continue;
      if (near_log(cell.logsum + o.logsum, target.logsum)) {
        fits.push_back(&o);
        weight_total += cell.ways;
      }
    }
    const MisOption* picked = fits.back();
    if (fits.size() > 1) {
      double r = rng.next_unit() * weight_total;
      for (const MisOption* o : fits) {
        r -= prev[k_rem - o->size].ways;
        if (r < 0) {
          picked = o;
          break;
        }
      }
    }
    chosen_idx.insert(chosen_idx.end(), picked->members.begin(),
                      picked->members.end());
    k_rem -= picked->size;
  }

  SelectionResult result;
  result.sentence = sentence;
  double logsum = 0;
  for (int i : chosen_idx) {
    result.chosen.push_back(hypotheses[i].hyp);
    logsum += std::log(hypotheses[i].p);
  }
  std::sort(result.chosen.begin(), result.chosen.end(),
            [](const Hypothesis& a, const Hypothesis& b) {
              if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
              if (a.span.end != b.span.end) return a.span.end > b.span.end;
              return a.label < b.label;
            });
  result.objective = std::exp(logsum / static_cast<double>(result.chosen.size()));
  return result;
}

std::vector<SelectionResult> select_corpus(const HypothesisStore& store,
                                           SelectionMethod method,
                                           uint64_t seed) {
  std::vector<SelectionResult> results;
  results.reserve(store.corpus().size());

  if (method == SelectionMethod::kIncr) {
    if (!store.incremental())
      throw InvalidArgument("incr selection requires an incrementally built store");
    for (const Sentence& s : store.corpus()) {
      SelectionResult r;
      r.sentence = s.id;
      r.chosen = store.hypotheses_of(s.id);
      results.push_back(std::move(r));
    }
    return results;
  }

  if (store.incremental())
    throw InvalidArgument(
        "leaf/branch selection requires a store with the full hypothesis set");
  const StoreCounts c = store.counts();
  for (const Sentence& s : store.corpus()) {
    std::vector<ScoredHypothesis> scored;
    for (const Hypothesis& h : store.hypotheses_of(s.id)) {
      const double p = method == SelectionMethod::kLeaf ? p_leaf(h, store, c)
                                                        : p_branch(h, store, c);
      scored.push_back(ScoredHypothesis{h, p});
    }
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(s.id)));
    results.push_back(select(scored, rng));
  }
  return results;
}

}  // namespace abl
