#include "abl/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>

#include "abl/error.hpp"

namespace abl {

bool crossing(Span a, Span b) {
  return (a.begin < b.begin && b.begin < a.end && a.end < b.end) ||
         (b.begin < a.begin && a.begin < b.end && b.end < a.end);
}

bool valid_token(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token)
    if (std::isspace(c)) return false;
  return true;
}

Sentence make_sentence(int id, std::vector<std::string> tokens) {
  if (tokens.empty())
    throw InvalidArgument("sentence " + std::to_string(id) + " has no tokens");
  for (const auto& t : tokens)
    if (!valid_token(t))
      throw InvalidArgument("invalid token in sentence " + std::to_string(id));
  return Sentence{id, std::move(tokens)};
}

Tree leaf(std::string token) {
  Tree t;
  t.token = std::move(token);
  return t;
}

Tree node(std::string label, std::vector<Tree> children) {
  Tree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

namespace {

void collect_leaves(const Tree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(t.token);
    return;
  }
  for (const Tree& c : t.children) collect_leaves(c, out);
}

int collect_brackets(const Tree& t, int offset, std::set<Span>& out) {
  if (t.is_leaf()) return 1;
  int width = 0;
  for (const Tree& c : t.children)
    width += collect_brackets(c, offset + width, out);
  out.insert(Span{offset, offset + width});
  return width;
}

}  // namespace

std::vector<std::string> leaves_of(const Tree& t) {
  std::vector<std::string> out;
  collect_leaves(t, out);
  return out;
}

int leaf_count(const Tree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const Tree& c : t.children) n += leaf_count(c);
  return n;
}

std::set<Span> brackets_of(const Tree& t) {
  std::set<Span> out;
  collect_brackets(t, 0, out);
  return out;
}

namespace {

struct LineParser {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  std::string atom() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    return text.substr(start, pos - start);
  }

  Tree tree() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
      throw ParseError("expected '('", line);
    ++pos;
    skip_ws();
    if (pos >= text.size()) throw ParseError("unbalanced parentheses", line);
    if (text[pos] == ')') throw ParseError("empty node '()'", line);
    if (text[pos] == '(') throw ParseError("node label missing", line);
    Tree t;
    t.label = atom();
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unbalanced parentheses", line);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(')
        t.children.push_back(tree());
      else
        t.children.push_back(leaf(atom()));
    }
    if (t.children.empty())
      throw ParseError("node '" + t.label + "' has no children", line);
    return t;
  }
};

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

Treebank parse_bracketed(std::istream& in) {
  Treebank tb;
  std::string ln;
  int line = 0;
  while (std::getline(in, ln)) {
    ++line;
    if (blank(ln)) continue;
    LineParser p{ln, line};
    tb.push_back(p.tree());
    if (!p.at_end()) throw ParseError("trailing content after tree", line);
  }
  return tb;
}

Treebank parse_bracketed_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bracketed(in);
}

namespace {

void serialize_rec(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.token;
    return;
  }
  out += '(';
  out += t.label;
  for (const Tree& c : t.children) {
    out += ' ';
    serialize_rec(c, out);
  }
  out += ')';
}

}  // namespace

std::string serialize(const Tree& t) {
  std::string out;
  serialize_rec(t, out);
  return out;
}

std::string serialize_text(const Treebank& tb) {
  std::string out;
  for (const Tree& t : tb) {
    serialize_rec(t, out);
    out += '\n';
  }
  return out;
}

void serialize(const Treebank& tb, std::ostream& out) {
  out << serialize_text(tb);
}

std::vector<Sentence> strip(const Treebank& tb) {
  if (tb.empty()) throw InvalidArgument("cannot strip an empty treebank");
  std::vector<Sentence> out;
  out.reserve(tb.size());
  for (std::size_t i = 0; i < tb.size(); ++i)
    out.push_back(make_sentence(static_cast<int>(i), leaves_of(tb[i])));
  return out;
}

Tree build_tree(const Sentence& s, const std::vector<Constituent>& constituents) {
  const int len = static_cast<int>(s.tokens.size());
  bool has_root = false;
  for (const Constituent& c : constituents) {
    if (!(0 <= c.span.begin && c.span.begin < c.span.end && c.span.end <= len))
      throw InvalidArgument("constituent span out of range for sentence " +
                            std::to_string(s.id));
    if (c.span.begin == 0 && c.span.end == len) has_root = true;
  }
  if (!has_root) throw InvalidArgument("missing root span");
  for (std::size_t i = 0; i < constituents.size(); ++i)
    for (std::size_t j = i + 1; j < constituents.size(); ++j)
      if (crossing(constituents[i].span, constituents[j].span))
        throw InvalidArgument(
            "crossing constituents (" + std::to_string(constituents[i].span.begin) +
            "," + std::to_string(constituents[i].span.end) + ") and (" +
            std::to_string(constituents[j].span.begin) + "," +
            std::to_string(constituents[j].span.end) + ")");

  // Outer-first order; identical spans keep insertion order (unary chains).
  std::vector<Constituent> sorted = constituents;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Constituent& a, const Constituent& b) {
                     if (a.span.begin != b.span.begin)
                       return a.span.begin < b.span.begin;
                     return a.span.end > b.span.end;
                   });

  std::size_t idx = 0;
  auto rec = [&](auto&& self) -> Tree {
    const Constituent& c = sorted[idx];
    ++idx;
    Tree t;
    t.label = c.label;
    int pos = c.span.begin;
    while (idx < sorted.size() && c.span.contains(sorted[idx].span)) {
      const Span child_span = sorted[idx].span;
      for (int i = pos; i < child_span.begin; ++i)
        t.children.push_back(leaf(s.tokens[i]));
      t.children.push_back(self(self));
      pos = child_span.end;
    }
    for (int i = pos; i < c.span.end; ++i) t.children.push_back(leaf(s.tokens[i]));
    return t;
  };
  return rec(rec);
}

std::vector<Sentence> read_plain_corpus(std::istream& in) {
  std::vector<Sentence> corpus;
  std::string ln;
  int line = 0;
  while (std::getline(in, ln)) {
    ++line;
    if (blank(ln)) throw ParseError("blank line in plain corpus", line);
    std::vector<std::string> tokens;
    std::istringstream ts(ln);
    std::string tok;
    while (ts >> tok) tokens.push_back(tok);
    corpus.push_back(make_sentence(static_cast<int>(corpus.size()), std::move(tokens)));
  }
  return corpus;
}

std::vector<Sentence> parse_plain_corpus(const std::string& text) {
  std::istringstream in(text);
  return read_plain_corpus(in);
}

std::string plain_corpus_text(const std::vector<Sentence>& corpus) {
  std::string out;
  for (const Sentence& s : corpus) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i) out += ' ';
      out += s.tokens[i];
    }
    out += '\n';
  }
  return out;
}

void write_plain_corpus(const std::vector<Sentence>& corpus, std::ostream& out) {
  out << plain_corpus_text(corpus);
}

std::vector<Sentence> load_plain_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  return read_plain_corpus(in);
}

Treebank load_treebank(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open treebank file: " + path);
  return parse_bracketed(in);
}

void save_plain_corpus(const std::vector<Sentence>& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus file: " + path);
  write_plain_corpus(corpus, out);
}

void save_treebank(const Treebank& tb, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write treebank file: " + path);
  serialize(tb, out);
}

}  // namespace abl
