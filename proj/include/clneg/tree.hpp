#pragma once

#include <list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clneg/error.hpp"

namespace clneg {

/// Penn-Treebank-style constituency tree. A node carries a token iff it is
/// a leaf. Trees are immutable after construction; surgery returns new trees.
struct Tree {
  std::string label;
  std::optional<std::string> token;
  std::vector<Tree> children;
  int node_id = 0;

  bool is_leaf() const { return children.empty(); }
};

/// Parse a single bracketed tree, e.g. "(NP (DT no) (NN evidence))".
/// Whitespace between tokens is not significant. node_id is assigned in
/// pre-order. Throws Error naming the character offset on malformed input.
Tree parse_ptb(const std::string& text);

/// Single-line bracketed serialization; parse_ptb(to_ptb(t)) == t.
std::string to_ptb(const Tree& tree);

/// Leaf tokens in left-to-right order.
std::vector<std::string> yield_tokens(const Tree& tree);

/// Structural equality: labels, tokens, child order (node ids ignored).
bool tree_equal(const Tree& a, const Tree& b);

/// Number of nodes in the tree.
int node_count(const Tree& tree);

/// Find a node by id; nullptr when absent.
const Tree* find_node(const Tree& tree, int node_id);

/// 1-based inclusive character span of the first in-order occurrence of
/// `tokens` within the whitespace-tokenized sentence. The match is a
/// (possibly non-contiguous) subsequence, resolved greedily left to right.
/// Throws Error when the tokens cannot be located.
std::pair<int, int> char_span(const std::string& sentence,
                              const std::vector<std::string>& tokens);

/// Whitespace tokenization with 1-based character offsets per token.
struct TokenSpan {
  std::string text;
  int start = 0;  // 1-based, inclusive
  int end = 0;    // 1-based, inclusive
};
std::vector<TokenSpan> tokenize_with_spans(const std::string& sentence);
std::vector<std::string> whitespace_tokens(const std::string& sentence);

struct TreebankEntry {
  std::string sentence;
  Tree tree;
};

/// Ordered (sentence, tree) pairs. Invariant: leaf tokens of each tree equal
/// the whitespace tokens of the sentence.
struct Treebank {
  std::vector<TreebankEntry> entries;

  /// Lookup by whitespace-normalized sentence text; nullptr when absent.
  const Tree* find(const std::string& sentence) const;
};

/// Load the sidecar format: records separated by blank lines, each record is
/// the sentence line followed by the single-line PTB tree.
Treebank load_treebank(const std::string& path);
Treebank parse_treebank(const std::string& content, const std::string& origin);

/// Source of constituency trees for pruned fragments.
class TreeProvider {
 public:
  virtual ~TreeProvider() = default;
  virtual const Tree* tree_for(const std::string& fragment_text) const = 0;
};

class TreebankProvider : public TreeProvider {
 public:
  explicit TreebankProvider(Treebank bank);
  const Tree* tree_for(const std::string& fragment_text) const override;

 private:
  Treebank bank_;
};

/// Obtains trees by piping fragments (one per line) through an external
/// command that prints one PTB tree per line.
class CommandProvider : public TreeProvider {
 public:
  explicit CommandProvider(std::string command);
  const Tree* tree_for(const std::string& fragment_text) const override;

 private:
  std::string command_;
  mutable std::list<TreebankEntry> cache_;
};

}  // namespace clneg
