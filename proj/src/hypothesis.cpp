#include "abl/hypothesis.hpp"

#include <algorithm>
#include <ostream>

#include "abl/error.hpp"

namespace abl {

LabelId LabelRegistry::resolve(LabelId l) const {
  if (l < 0 || l >= static_cast<LabelId>(parent_.size()))
    throw InvalidArgument("unknown label " + std::to_string(l));
  while (parent_[l] != l) {
    parent_[l] = parent_[parent_[l]];  // path halving
    l = parent_[l];
  }
  return l;
}

bool LabelRegistry::merge(LabelId a, LabelId b) {
  a = resolve(a);
  b = resolve(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;  // smallest id stays canonical
  return true;
}

int LabelRegistry::num_classes() const {
  int n = 0;
  for (LabelId l = 0; l < static_cast<LabelId>(parent_.size()); ++l)
    if (resolve(l) == l) ++n;
  return n;
}

std::string yield_key(const Sentence& s, Span span) {
  std::string out;
  for (int i = span.begin; i < span.end; ++i) {
    if (i > span.begin) out += ' ';
    out += s.tokens[i];
  }
  return out;
}

std::string yield_label_key(LabelId canonical_label, const std::string& yield) {
  return std::to_string(canonical_label) + ' ' + yield;
}

HypothesisStore::HypothesisStore(std::vector<Sentence> corpus, bool incremental)
    : corpus_(std::move(corpus)), incremental_(incremental) {
  if (corpus_.empty()) throw InvalidArgument("empty corpus");
  hyps_.resize(corpus_.size());
  for (std::size_t idx = 0; idx < corpus_.size(); ++idx) {
    const Sentence& s = corpus_[idx];
    if (s.tokens.empty())
      throw InvalidArgument("sentence " + std::to_string(s.id) + " has no tokens");
    if (!index_by_id_.emplace(s.id, static_cast<int>(idx)).second)
      throw InvalidArgument("duplicate sentence id " + std::to_string(s.id));
    hyps_[idx][Span{0, static_cast<int>(s.tokens.size())}] = kRootLabel;
  }
}

int HypothesisStore::index_of(int sentence_id) const {
  auto it = index_by_id_.find(sentence_id);
  if (it == index_by_id_.end())
    throw InvalidArgument("unknown sentence id " + std::to_string(sentence_id));
  return it->second;
}

void HypothesisStore::store_if_allowed(int index, Span span, LabelId label) {
  if (incremental_) {
    for (const auto& [existing, lab] : hyps_[index])
      if (crossing(existing, span)) return;
  }
  hyps_[index][span] = label;
}

void HypothesisStore::submit_pair(int sentence1, Span span1, int sentence2,
                                  Span span2) {
  const int i1 = index_of(sentence1);
  const int i2 = index_of(sentence2);
  auto check = [](const Sentence& s, Span sp) {
    if (!(0 <= sp.begin && sp.begin < sp.end &&
          sp.end <= static_cast<int>(s.tokens.size())))
      throw InvalidArgument("span out of range for sentence " +
                            std::to_string(s.id));
  };
  check(corpus_[i1], span1);
  check(corpus_[i2], span2);

  auto f1 = hyps_[i1].find(span1);
  auto f2 = hyps_[i2].find(span2);
  const bool known1 = f1 != hyps_[i1].end();
  const bool known2 = f2 != hyps_[i2].end();

  if (known1 && known2) {
    registry_.merge(f1->second, f2->second);
    return;
  }
  const LabelId label = known1   ? registry_.resolve(f1->second)
                        : known2 ? registry_.resolve(f2->second)
                                 : registry_.fresh();
  if (!known1) store_if_allowed(i1, span1, label);
  if (!known2) store_if_allowed(i2, span2, label);
}

std::vector<Hypothesis> HypothesisStore::hypotheses_of(int sentence_id) const {
  const int idx = index_of(sentence_id);
  std::vector<Hypothesis> out;
  out.reserve(hyps_[idx].size());
  for (const auto& [span, label] : hyps_[idx])
    out.push_back(Hypothesis{sentence_id, span, registry_.resolve(label)});
  std::sort(out.begin(), out.end(), [](const Hypothesis& a, const Hypothesis& b) {
    if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
    return a.span.end > b.span.end;
  });
  return out;
}

StoreCounts HypothesisStore::counts() const {
  StoreCounts c;
  for (std::size_t idx = 0; idx < corpus_.size(); ++idx)
    for (const auto& [span, label] : hyps_[idx]) {
      ++c.total;
      const std::string yield = yield_key(corpus_[idx], span);
      const LabelId canonical = registry_.resolve(label);
      ++c.by_yield[yield];
      ++c.by_label[canonical];
      ++c.by_yield_label[yield_label_key(canonical, yield)];
    }
  return c;
}

const Sentence& HypothesisStore::sentence(int sentence_id) const {
  return corpus_[index_of(sentence_id)];
}

long HypothesisStore::size() const {
  long n = 0;
  for (const auto& m : hyps_) n += static_cast<long>(m.size());
  return n;
}

void HypothesisStore::dump(std::ostream& out) const {
  for (std::size_t idx = 0; idx < corpus_.size(); ++idx)
    for (const auto& [span, label] : hyps_[idx])
      out << corpus_[idx].id << ' ' << span.begin << ' ' << span.end << ' '
          << registry_.resolve(label) << '\n';
}

}  // namespace abl
