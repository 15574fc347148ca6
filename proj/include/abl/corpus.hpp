#ifndef ABL_CORPUS_HPP
#define ABL_CORPUS_HPP

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace abl {

// Half-open token interval within a sentence; zero-width spans are invalid.
struct Span {
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  auto operator<=>(const Span&) const = default;
};

// True iff the spans partially overlap without either containing the other.
bool crossing(Span a, Span b);

// Tokens are non-empty strings without whitespace; comparison is exact and
// case-sensitive.
bool valid_token(const std::string& token);

struct Sentence {
  int id = 0;
  std::vector<std::string> tokens;

  bool operator==(const Sentence&) const = default;
};

// Validates the token invariants (throws InvalidArgument).
Sentence make_sentence(int id, std::vector<std::string> tokens);

// Ordered tree over tokens: a node is either a leaf holding one token or an
// internal node with a label and at least one child.
struct Tree {
  std::string label;           // internal nodes
  std::string token;           // leaves
  std::vector<Tree> children;  // empty for leaves

  bool is_leaf() const { return children.empty(); }
  bool operator==(const Tree&) const = default;
};

Tree leaf(std::string token);
Tree node(std::string label, std::vector<Tree> children);

using Treebank = std::vector<Tree>;

// A (span, label) pair used when assembling trees.
struct Constituent {
  Span span;
  std::string label;
};

std::vector<std::string> leaves_of(const Tree& t);
int leaf_count(const Tree& t);

// Unlabelled spans of all internal nodes, root included. Set semantics: the
// identical spans of a unary chain count once.
std::set<Span> brackets_of(const Tree& t);

// One tree per non-empty line, `(LABEL child child ...)`, atoms delimited by
// whitespace. Parse errors carry the offending line number.
Treebank parse_bracketed(std::istream& in);
Treebank parse_bracketed_text(const std::string& text);

std::string serialize(const Tree& t);
std::string serialize_text(const Treebank& tb);
void serialize(const Treebank& tb, std::ostream& out);

// Discards all structure; sentence i is the leaf sequence of tree i.
std::vector<Sentence> strip(const Treebank& tb);

// Builds the unique tree whose internal nodes are exactly `constituents`,
// attaching each token to its smallest enclosing constituent. Requires the
// full-sentence span to be present and all spans pairwise non-crossing.
// Constituents with identical spans form a unary chain, outer to inner in
// input order.
Tree build_tree(const Sentence& s, const std::vector<Constituent>& constituents);

// Plain corpus: one sentence per line, tokens separated by spaces, no blank
// lines.
std::vector<Sentence> read_plain_corpus(std::istream& in);
std::vector<Sentence> parse_plain_corpus(const std::string& text);
void write_plain_corpus(const std::vector<Sentence>& corpus, std::ostream& out);
std::string plain_corpus_text(const std::vector<Sentence>& corpus);

std::vector<Sentence> load_plain_corpus(const std::string& path);
Treebank load_treebank(const std::string& path);
void save_plain_corpus(const std::vector<Sentence>& corpus, const std::string& path);
void save_treebank(const Treebank& tb, const std::string& path);

}  // namespace abl

#endif  // ABL_CORPUS_HPP
