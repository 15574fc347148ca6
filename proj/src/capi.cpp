#include "abl.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "abl/baselines.hpp"
#include "abl/corpus.hpp"
#include "abl/error.hpp"
#include "abl/evaluation.hpp"
#include "abl/pipeline.hpp"

extern "C" {

struct abl_corpus {
  std::vector<abl::Sentence> rep;
};

struct abl_treebank {
  abl::Treebank rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

abl_status fail(abl_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
abl_status guard(F&& f) {
  try {
    return f();
  } catch (const abl::ParseError& e) {
    return fail(ABL_ERROR_PARSE, e.what());
  } catch (const abl::IoError& e) {
    return fail(ABL_ERROR_IO, e.what());
  } catch (const abl::MismatchError& e) {
    return fail(ABL_ERROR_MISMATCH, e.what());
  } catch (const abl::InvalidArgument& e) {
    return fail(ABL_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ABL_ERROR_INTERNAL, e.what());
  }
}

abl_status require(bool ok, const char* message) {
  return ok ? ABL_OK : fail(ABL_ERROR_INVALID_ARGUMENT, message);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

abl::Direction parse_direction(const char* direction) {
  const std::string d = direction ? direction : "";
  if (d == "left") return abl::Direction::kLeft;
  if (d == "right") return abl::Direction::kRight;
  throw abl::InvalidArgument("unknown direction '" + d +
                             "' (expected left or right)");
}

}  // namespace

extern "C" {

const char* abl_version(void) { return "1.0.0"; }

const char* abl_last_error(void) { return g_last_error.c_str(); }

void abl_string_free(char* s) { std::free(s); }

abl_status abl_corpus_read(const char* path, abl_corpus** out) {
  if (require(path && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_corpus{abl::load_plain_corpus(path)};
    return ABL_OK;
  });
}

abl_status abl_corpus_parse(const char* text, abl_corpus** out) {
  if (require(text && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_corpus{abl::parse_plain_corpus(text)};
    return ABL_OK;
  });
}

abl_status abl_corpus_write(const abl_corpus* corpus, const char* path) {
  if (require(corpus && path, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    abl::save_plain_corpus(corpus->rep, path);
    return ABL_OK;
  });
}

abl_status abl_corpus_format(const abl_corpus* corpus, char** out) {
  if (require(corpus && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(abl::plain_corpus_text(corpus->rep));
    return ABL_OK;
  });
}

size_t abl_corpus_sentence_count(const abl_corpus* corpus) {
  return corpus ? corpus->rep.size() : 0;
}

abl_status abl_corpus_filter_short(const abl_corpus* corpus, size_t min_tokens,
                                   abl_corpus** out) {
  if (require(corpus && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    auto filtered = new abl_corpus;
    for (const abl::Sentence& s : corpus->rep)
      if (s.tokens.size() >= min_tokens) {
        abl::Sentence kept = s;
        kept.id = static_cast<int>(filtered->rep.size());
        filtered->rep.push_back(std::move(kept));
      }
    *out = filtered;
    return ABL_OK;
  });
}

void abl_corpus_free(abl_corpus* corpus) { delete corpus; }

abl_status abl_treebank_read(const char* path, abl_treebank** out) {
  if (require(path && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_treebank{abl::load_treebank(path)};
    return ABL_OK;
  });
}

abl_status abl_treebank_parse(const char* text, abl_treebank** out) {
  if (require(text && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_treebank{abl::parse_bracketed_text(text)};
    return ABL_OK;
  });
}

abl_status abl_treebank_write(const abl_treebank* tb, const char* path) {
  if (require(tb && path, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    abl::save_treebank(tb->rep, path);
    return ABL_OK;
  });
}

abl_status abl_treebank_format(const abl_treebank* tb, char** out) {
  if (require(tb && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = copy_string(abl::serialize_text(tb->rep));
    return ABL_OK;
  });
}

size_t abl_treebank_tree_count(const abl_treebank* tb) {
  return tb ? tb->rep.size() : 0;
}

abl_status abl_treebank_strip(const abl_treebank* tb, abl_corpus** out) {
  if (require(tb && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_corpus{abl::strip(tb->rep)};
    return ABL_OK;
  });
}

void abl_treebank_free(abl_treebank* tb) { delete tb; }

abl_status abl_learn(const abl_corpus* corpus, const char* method,
                     uint64_t seed, abl_treebank** out) {
  if (require(corpus && method && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    const abl::Method m = abl::parse_method(method);
    if (m == abl::Method::kLeft || m == abl::Method::kRight)
      throw abl::InvalidArgument(
          "learn expects method incr, leaf or branch; use abl_baseline for "
          "left/right");
    *out = new abl_treebank{abl::learn(corpus->rep, m, seed)};
    return ABL_OK;
  });
}

abl_status abl_baseline(const abl_corpus* corpus, const char* direction,
                        abl_treebank** out) {
  if (require(corpus && direction && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    *out = new abl_treebank{
        abl::baseline_treebank(corpus->rep, parse_direction(direction))};
    return ABL_OK;
  });
}

abl_status abl_evaluate(const abl_treebank* learned, const abl_treebank* gold,
                        abl_metrics* out) {
  if (require(learned && gold && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    const abl::MetricsReport r = abl::evaluate(learned->rep, gold->rep);
    *out = abl_metrics{r.ncbp, r.ncbr, r.zcs};
    return ABL_OK;
  });
}

abl_status abl_format_metrics(const abl_metrics* m, char** out) {
  if (require(m && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    abl::MetricsReport r;
    r.ncbp = m->ncbp;
    r.ncbr = m->ncbr;
    r.zcs = m->zcs;
    *out = copy_string(abl::format_report(r));
    return ABL_OK;
  });
}

abl_status abl_format_aggregate(const abl_aggregate* a, char** out) {
  if (require(a && out, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    abl::RunAggregate agg;
    agg.ncbp = {a->mean.ncbp, a->stddev.ncbp};
    agg.ncbr = {a->mean.ncbr, a->stddev.ncbr};
    agg.zcs = {a->mean.zcs, a->stddev.zcs};
    agg.runs = static_cast<int>(a->runs);
    *out = copy_string(abl::format_report(agg));
    return ABL_OK;
  });
}

abl_status abl_run_experiment(const char* corpus_path, const char* gold_path,
                              const char* method, uint32_t runs, uint64_t seed,
                              uint32_t min_tokens, const char* out_dir,
                              abl_aggregate* out) {
  if (require(corpus_path && method && out_dir, "null argument") != ABL_OK)
    return ABL_ERROR_INVALID_ARGUMENT;
  return guard([&] {
    abl::RunConfig cfg;
    cfg.method = abl::parse_method(method);
    cfg.runs = static_cast<int>(runs);
    cfg.seed = seed;
    cfg.min_len = static_cast<int>(min_tokens);
    cfg.corpus_path = corpus_path;
    cfg.gold_path = gold_path ? gold_path : "";
    cfg.out_dir = out_dir;
    const abl::ExperimentResult r = abl::run_experiment(cfg);
    if (out) {
      *out = abl_aggregate{};
      out->runs = static_cast<uint32_t>(r.outputs.size());
      out->evaluated = r.evaluated ? 1 : 0;
      if (r.evaluated) {
        out->runs = static_cast<uint32_t>(r.aggregate.runs);
        out->mean = abl_metrics{r.aggregate.ncbp.mean, r.aggregate.ncbr.mean,
                                r.aggregate.zcs.mean};
        out->stddev = abl_metrics{r.aggregate.ncbp.stddev,
                                  r.aggregate.ncbr.stddev,
                                  r.aggregate.zcs.stddev};
      }
    }
    return ABL_OK;
  });
}

}  // extern "C"
