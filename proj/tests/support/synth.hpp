// Deterministic synthetic corpus: travel-information request frames sampled
// from a small CFG. The gold tree of each sentence follows its derivation.
#ifndef ABL_TESTS_SYNTH_HPP
#define ABL_TESTS_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "abl/corpus.hpp"
#include "abl/rng.hpp"

namespace synth {

inline constexpr uint64_t kSeed = 20240901;

inline const char* pick(abl::SplitMix64& rng,
                        const std::vector<const char*>& options) {
  return options[rng.next_below(options.size())];
}

inline abl::Tree city(abl::SplitMix64& rng) {
  static const std::vector<const char*> cities = {
      "dallas",    "boston",  "denver",       "atlanta",
      "baltimore", "oakland", "philadelphia", "pittsburgh"};
  return abl::node("C", {abl::leaf(pick(rng, cities))});
}

inline abl::Tree day(abl::SplitMix64& rng) {
  static const std::vector<const char*> days = {"monday", "tuesday", "wednesday",
                                                "thursday", "friday"};
  return abl::node("D", {abl::leaf(pick(rng, days))});
}

inline abl::Tree noun_phrase(abl::SplitMix64& rng) {
  switch (rng.next_below(10)) {
    case 0:
    case 1:
    case 2:
      return abl::node("NP", {abl::leaf("the"), abl::leaf("flights"),
                              abl::node("PP", {abl::leaf("from"), city(rng)}),
                              abl::node("PP", {abl::leaf("to"), city(rng)})});
    case 3:
    case 4:
      return abl::node("NP", {abl::leaf("a"), abl::leaf("flight"),
                              abl::node("PP", {abl::leaf("to"), city(rng)})});
    case 5:
    case 6: {
      static const std::vector<const char*> kinds = {"morning", "evening",
                                                     "afternoon", "nonstop"};
      return abl::node("NP", {abl::leaf("the"), abl::leaf(pick(rng, kinds)),
                              abl::leaf("flights")});
    }
    case 7:
    case 8:
      return abl::node("NP", {abl::leaf("the"), abl::leaf("fares"),
                              abl::node("PP", {abl::leaf("on"), day(rng)})});
    default:
      return abl::node("NP", {abl::leaf("the"), abl::leaf("cheapest"),
                              abl::leaf("fare")});
  }
}

inline abl::Tree sentence_tree(abl::SplitMix64& rng) {
  switch (rng.next_below(10)) {
    case 0:
    case 1:
    case 2:
      return abl::node("TOP", {abl::leaf("show"), abl::leaf("me"),
                               noun_phrase(rng)});
    case 3:
    case 4:
      return abl::node("TOP", {abl::leaf("list"), noun_phrase(rng)});
    case 5:
    case 6:
      return abl::node("TOP", {abl::leaf("book"), noun_phrase(rng)});
    case 7:
    case 8:
      return abl::node("TOP", {abl::leaf("i"), abl::leaf("need"),
                               noun_phrase(rng)});
    default:
      return abl::node("TOP", {abl::leaf("what"), abl::leaf("is"),
                               abl::leaf("the"), abl::leaf("cost"),
                               abl::node("PP", {abl::leaf("of"), noun_phrase(rng)})});
  }
}

inline abl::Treebank gold_treebank(int sentences, uint64_t seed = kSeed) {
  abl::SplitMix64 rng(seed);
  abl::Treebank tb;
  tb.reserve(sentences);
  for (int i = 0; i < sentences; ++i) tb.push_back(sentence_tree(rng));
  return tb;
}

}  // namespace synth

#endif  // ABL_TESTS_SYNTH_HPP
