#include "abl/evaluation.hpp"

#include <cmath>
#include <cstdio>

#include "abl/error.hpp"

namespace abl {

namespace {

int count_crossing(const std::set<Span>& from, const std::set<Span>& against) {
  int n = 0;
  for (const Span& a : from)
    for (const Span& b : against)
      if (crossing(a, b)) {
        ++n;
        break;
      }
  return n;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  while (s.size() < width) s += ' ';
  return s;
}

}  // namespace

MetricsReport evaluate(const Treebank& learned, const Treebank& gold) {
  if (learned.empty() || gold.empty())
    throw InvalidArgument("cannot evaluate empty treebanks");
  if (learned.size() != gold.size())
    throw MismatchError("treebank sizes differ: learned has " +
                        std::to_string(learned.size()) + " trees, gold has " +
                        std::to_string(gold.size()));

  MetricsReport report;
  long learned_total = 0, gold_total = 0;
  long learned_crossed = 0, gold_crossed = 0;
  long zero_sentences = 0;
  for (std::size_t i = 0; i < learned.size(); ++i) {
    if (leaves_of(learned[i]) != leaves_of(gold[i]))
      throw MismatchError("token mismatch at sentence " + std::to_string(i));
    const std::set<Span> lb = brackets_of(learned[i]);
    const std::set<Span> gb = brackets_of(gold[i]);
    SentenceCrossings sc;
    sc.learned_brackets = static_cast<int>(lb.size());
    sc.gold_brackets = static_cast<int>(gb.size());
    sc.learned_crossing = count_crossing(lb, gb);
    sc.gold_crossing = count_crossing(gb, lb);
    learned_total += sc.learned_brackets;
    gold_total += sc.gold_brackets;
    learned_crossed += sc.learned_crossing;
    gold_crossed += sc.gold_crossing;
    if (sc.learned_crossing == 0) ++zero_sentences;
    report.per_sentence.push_back(sc);
  }
  report.ncbp = 100.0 * static_cast<double>(learned_total - learned_crossed) /
                static_cast<double>(learned_total);
  report.ncbr = 100.0 * static_cast<double>(gold_total - gold_crossed) /
                static_cast<double>(gold_total);
  report.zcs = 100.0 * static_cast<double>(zero_sentences) /
               static_cast<double>(learned.size());
  return report;
}

RunAggregate aggregate(const std::vector<MetricsReport>& reports) {
  if (reports.empty()) throw InvalidArgument("no reports to aggregate");
  const auto stats = [&](double MetricsReport::* field) {
    MetricStats s;
    for (const MetricsReport& r : reports) s.mean += r.*field;
    s.mean /= static_cast<double>(reports.size());
    if (reports.size() > 1) {
      double ss = 0;
      for (const MetricsReport& r : reports) {
        const double d = r.*field - s.mean;
        ss += d * d;
      }
      s.stddev = std::sqrt(ss / static_cast<double>(reports.size() - 1));
    }
    return s;
  };
  RunAggregate agg;
  agg.ncbp = stats(&MetricsReport::ncbp);
  agg.ncbr = stats(&MetricsReport::ncbr);
  agg.zcs = stats(&MetricsReport::zcs);
  agg.runs = static_cast<int>(reports.size());
  return agg;
}

std::string format_report(const MetricsReport& report) {
  std::string out;
  out += pad("NCBP", 8) + pad("NCBR", 8) + "ZCS\n";
  out += pad(fmt2(report.ncbp), 8) + pad(fmt2(report.ncbr), 8) +
         fmt2(report.zcs) + "\n";
  out += "ncbp=" + fmt2(report.ncbp) + "\n";
  out += "ncbr=" + fmt2(report.ncbr) + "\n";
  out += "zcs=" + fmt2(report.zcs) + "\n";
  return out;
}

std::string format_report(const RunAggregate& agg) {
  const auto cell = [](const MetricStats& s) {
    return fmt2(s.mean) + " (" + fmt2(s.stddev) + ")";
  };
  std::string out;
  out += pad("NCBP", 15) + pad("NCBR", 15) + "ZCS\n";
  out += pad(cell(agg.ncbp), 15) + pad(cell(agg.ncbr), 15) + cell(agg.zcs) + "\n";
  out += "runs=" + std::to_string(agg.runs) + "\n";
  out += "ncbp_mean=" + fmt2(agg.ncbp.mean) + "\n";
  out += "ncbp_stddev=" + fmt2(agg.ncbp.stddev) + "\n";
  out += "ncbr_mean=" + fmt2(agg.ncbr.mean) + "\n";
  out += "ncbr_stddev=" + fmt2(agg.ncbr.stddev) + "\n";
  out += "zcs_mean=" + fmt2(agg.zcs.mean) + "\n";
  out += "zcs_stddev=" + fmt2(agg.zcs.stddev) + "\n";
  return out;
}

}  // namespace abl
