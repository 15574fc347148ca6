/* C interface of the abl library: grammar induction from plain sentence
 * corpora by pairwise alignment, plus treebank bracket evaluation.
 *
 * All handles are opaque; functions return abl_status and leave a
 * human-readable message for the last failure in abl_last_error()
 * (thread-local). Strings returned as char* are heap-allocated and must be
 * released with abl_string_free().
 */
#ifndef ABL_H
#define ABL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abl_status {
  ABL_OK = 0,
  ABL_ERROR_INVALID_ARGUMENT = 1, /* bad handle, flag or contract violation */
  ABL_ERROR_PARSE = 2,            /* malformed corpus or treebank input */
  ABL_ERROR_IO = 3,               /* file not readable/writable */
  ABL_ERROR_MISMATCH = 4,         /* learned/gold treebank disagreement */
  ABL_ERROR_INTERNAL = 5
} abl_status;

typedef struct abl_corpus abl_corpus;     /* plain tokenized sentences */
typedef struct abl_treebank abl_treebank; /* bracketed trees */

typedef struct abl_metrics {
  double ncbp; /* non-crossing brackets precision, percent */
  double ncbr; /* non-crossing brackets recall, percent */
  double zcs;  /* zero-crossing sentences, percent */
} abl_metrics;

typedef struct abl_aggregate {
  abl_metrics mean;
  abl_metrics stddev; /* sample standard deviation over runs */
  uint32_t runs;
  int evaluated; /* 0 when no gold treebank was given */
} abl_aggregate;

const char* abl_version(void);
const char* abl_last_error(void);
void abl_string_free(char* s);

/* ---- plain corpus: one sentence per line, space-separated tokens ---- */
abl_status abl_corpus_read(const char* path, abl_corpus** out);
abl_status abl_corpus_parse(const char* text, abl_corpus** out);
abl_status abl_corpus_write(const abl_corpus* corpus, const char* path);
abl_status abl_corpus_format(const abl_corpus* corpus, char** out);
size_t abl_corpus_sentence_count(const abl_corpus* corpus);
/* New corpus with the sentences of at least min_tokens tokens, re-indexed. */
abl_status abl_corpus_filter_short(const abl_corpus* corpus, size_t min_tokens,
                                   abl_corpus** out);
void abl_corpus_free(abl_corpus* corpus);

/* ---- treebank: one tree per line, (LABEL child child ...) ---- */
abl_status abl_treebank_read(const char* path, abl_treebank** out);
abl_status abl_treebank_parse(const char* text, abl_treebank** out);
abl_status abl_treebank_write(const abl_treebank* tb, const char* path);
abl_status abl_treebank_format(const abl_treebank* tb, char** out);
size_t abl_treebank_tree_count(const abl_treebank* tb);
/* Drops all structure, keeping the leaf token sequences. */
abl_status abl_treebank_strip(const abl_treebank* tb, abl_corpus** out);
void abl_treebank_free(abl_treebank* tb);

/* ---- learning ---- */
/* method: "incr", "leaf" or "branch". One full learn-and-select pass over
 * the corpus in its given order; all randomness is derived from seed. */
abl_status abl_learn(const abl_corpus* corpus, const char* method,
                     uint64_t seed, abl_treebank** out);
/* direction: "left" or "right". */
abl_status abl_baseline(const abl_corpus* corpus, const char* direction,
                        abl_treebank** out);

/* ---- evaluation ---- */
abl_status abl_evaluate(const abl_treebank* learned, const abl_treebank* gold,
                        abl_metrics* out);
abl_status abl_format_metrics(const abl_metrics* m, char** out);
abl_status abl_format_aggregate(const abl_aggregate* a, char** out);

/* ---- full experiment protocol ----
 * method: "incr", "leaf", "branch", "left" or "right". Writes run_<k>.br per
 * run (and report.txt when gold_path is non-NULL) under out_dir; sentences
 * shorter than min_tokens are dropped from the corpus and the gold treebank
 * alike. out may be NULL. */
abl_status abl_run_experiment(const char* corpus_path, const char* gold_path,
                              const char* method, uint32_t runs, uint64_t seed,
                              uint32_t min_tokens, const char* out_dir,
                              abl_aggregate* out);

#ifdef __cplusplus
}
#endif

#endif /* ABL_H */
