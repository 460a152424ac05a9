#pragma once

#include <string>
#include <vector>

#include "clneg/query.hpp"
#include "clneg/tree.hpp"

namespace clneg {

enum class SurgeryVerb { Delete, Excise, Extract };

struct SurgeryOp {
  SurgeryVerb verb;
  std::vector<std::string> args;  // capture names: delete 1, excise 2, extract 1
};

struct SurgeryScript {
  std::vector<SurgeryOp> ops;
};

/// Parse comma-separated clauses of the form `verb name[ name]`,
/// e.g. "delete neg" or "excise s head" or "delete head,delete neg".
/// An empty string is the empty script.
SurgeryScript parse_script(const std::string& text);

/// Remove the node and its subtree. Emptied nonterminal ancestors are
/// removed bottom-up. Node ids of surviving nodes are preserved.
/// Deleting the root (or emptying the whole tree) is an error.
Tree delete_node(const Tree& tree, int node_id);

/// Remove the chain from `top` down to `bottom` (top must dominate or equal
/// bottom) and splice bottom's children into top's parent at top's position.
Tree excise(const Tree& tree, int top_id, int bottom_id);

/// New tree rooted at TOP whose single child is a copy of the node's subtree
/// (unchanged if the node is already a TOP root). Fresh pre-order node ids.
Tree extract(const Tree& tree, int node_id);

/// Apply script operations left to right, resolving capture names through
/// the binding. Missing capture names are an error.
Tree run_script(const Tree& tree, const MatchBinding& binding, const SurgeryScript& script);

}  // namespace clneg
