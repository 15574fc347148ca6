// Command-line front end. Links only the C API of libabl.
//
// Exit codes: 0 success, 1 usage error, 2 data error (parse or mismatch).

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "abl.h"

namespace {

int rc_from(abl_status status) {
  switch (status) {
    case ABL_OK:
      return 0;
    case ABL_ERROR_PARSE:
    case ABL_ERROR_IO:
    case ABL_ERROR_MISMATCH:
      return 2;
    default:
      return 1;
  }
}

int complain(abl_status status) {
  std::fprintf(stderr, "error: %s\n", abl_last_error());
  return rc_from(status);
}

int cmd_strip(const std::string& gold, const std::string& out_path) {
  abl_treebank* tb = nullptr;
  abl_status st = abl_treebank_read(gold.c_str(), &tb);
  if (st != ABL_OK) return complain(st);
  abl_corpus* corpus = nullptr;
  st = abl_treebank_strip(tb, &corpus);
  if (st == ABL_OK) st = abl_corpus_write(corpus, out_path.c_str());
  abl_corpus_free(corpus);
  abl_treebank_free(tb);
  return st == ABL_OK ? 0 : complain(st);
}

int cmd_learn(const std::string& input, const std::string& method,
              uint64_t seed, const std::string& out_path) {
  abl_corpus* corpus = nullptr;
  abl_status st = abl_corpus_read(input.c_str(), &corpus);
  if (st != ABL_OK) return complain(st);
  abl_treebank* tb = nullptr;
  st = abl_learn(corpus, method.c_str(), seed, &tb);
  if (st == ABL_OK) st = abl_treebank_write(tb, out_path.c_str());
  abl_treebank_free(tb);
  abl_corpus_free(corpus);
  return st == ABL_OK ? 0 : complain(st);
}

int cmd_eval(const std::string& learned_path, const std::string& gold_path) {
  abl_treebank* learned = nullptr;
  abl_treebank* gold = nullptr;
  abl_status st = abl_treebank_read(learned_path.c_str(), &learned);
  if (st == ABL_OK) st = abl_treebank_read(gold_path.c_str(), &gold);
  abl_metrics metrics{};
  if (st == ABL_OK) st = abl_evaluate(learned, gold, &metrics);
  char* text = nullptr;
  if (st == ABL_OK) st = abl_format_metrics(&metrics, &text);
  if (st == ABL_OK) std::fputs(text, stdout);
  abl_string_free(text);
  abl_treebank_free(learned);
  abl_treebank_free(gold);
  return st == ABL_OK ? 0 : complain(st);
}

int cmd_baseline(const std::string& input, const std::string& direction,
                 const std::string& out_path) {
  abl_corpus* corpus = nullptr;
  abl_status st = abl_corpus_read(input.c_str(), &corpus);
  if (st != ABL_OK) return complain(st);
  abl_treebank* tb = nullptr;
  st = abl_baseline(corpus, direction.c_str(), &tb);
  if (st == ABL_OK) st = abl_treebank_write(tb, out_path.c_str());
  abl_treebank_free(tb);
  abl_corpus_free(corpus);
  return st == ABL_OK ? 0 : complain(st);
}

int cmd_run(const std::string& input, const std::string& gold,
            const std::string& method, uint32_t runs, uint64_t seed,
            uint32_t min_len, const std::string& out_dir) {
  abl_aggregate agg{};
  const abl_status st = abl_run_experiment(
      input.c_str(), gold.empty() ? nullptr : gold.c_str(), method.c_str(),
      runs, seed, min_len, out_dir.c_str(), &agg);
  if (st != ABL_OK) return complain(st);
  if (agg.evaluated) {
    char* text = nullptr;
    if (abl_format_aggregate(&agg, &text) == ABL_OK) std::fputs(text, stdout);
    abl_string_free(text);
  } else {
    std::printf("wrote %u run(s) to %s (no gold treebank, evaluation skipped)\n",
                agg.runs, out_dir.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bootstraps constituent structure from a plain sentence corpus "
               "by pairwise alignment, and scores treebanks with non-crossing "
               "bracket metrics"};
  app.set_version_flag("--version", abl_version());
  app.require_subcommand(1);

  std::string gold, input, output, method, direction, learned;
  uint64_t seed = 0;
  uint32_t runs = 10;
  uint32_t min_len = 1;

  auto* strip = app.add_subcommand("strip", "Treebank to plain corpus");
  strip->add_option("gold", gold, "bracketed treebank file")->required();
  strip->add_option("-o,--output", output, "plain corpus output")->required();

  auto* learn = app.add_subcommand("learn", "One full learn and select pass");
  learn->add_option("-i,--input", input, "plain corpus file")->required();
  learn->add_option("--method", method, "incr, leaf or branch")->required();
  learn->add_option("--seed", seed, "random seed (default 0)");
  learn->add_option("-o,--output", output, "bracketed output file")->required();

  auto* eval = app.add_subcommand("eval", "Score a learned treebank");
  eval->add_option("-l,--learned", learned, "learned treebank")->required();
  eval->add_option("-g,--gold", gold, "original treebank")->required();

  auto* baseline = app.add_subcommand("baseline", "Branching baseline trees");
  baseline->add_option("-i,--input", input, "plain corpus file")->required();
  baseline->add_option("--direction", direction, "left or right")->required();
  baseline->add_option("-o,--output", output, "bracketed output file")->required();

  auto* run = app.add_subcommand(
      "run", "Full protocol: repeated runs plus aggregate report");
  run->add_option("-i,--input", input, "plain corpus file")->required();
  run->add_option("-g,--gold", gold, "original treebank (optional)");
  run->add_option("--method", method, "incr, leaf, branch, left or right")
      ->required();
  run->add_option("--runs", runs, "number of runs (default 10)");
  run->add_option("--seed", seed, "master seed (default 0)");
  run->add_option("--min-len", min_len, "drop sentences shorter than this");
  run->add_option("-o,--output", output, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (strip->parsed()) return cmd_strip(gold, output);
  if (learn->parsed()) return cmd_learn(input, method, seed, output);
  if (eval->parsed()) return cmd_eval(learned, gold);
  if (baseline->parsed()) return cmd_baseline(input, direction, output);
  if (run->parsed())
    return cmd_run(input, gold, method, runs, seed, min_len, output);
  return 1;
}
