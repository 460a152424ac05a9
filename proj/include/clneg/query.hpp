#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clneg/tree.hpp"

namespace clneg {

/// The eight tree relations supported by the pattern language.
enum class RelationOp {
  Child,          // <   left immediately dominates right
  Dominates,      // <<  proper domination
  LeftmostDesc,   // <<, reachable by repeatedly taking first children
  RightmostDesc,  // <<- reachable by repeatedly taking last children
  LastChild,      // <-  right is the last child of left
  Parent,         // >   right is the parent of left
  Ancestor,       // >>  right is a proper ancestor of left
  Sister          // $   same parent, different node
};

std::string relation_name(RelationOp op);

/// A node description: literal label, /a|b/ alternation (a trailing '*'
/// in an alternative makes it a prefix match), or the wildcard "__".
/// Matches either a node's category label or, for leaves, its token.
struct NodeDesc {
  std::vector<std::string> alternatives;  // empty means wildcard
  std::optional<std::string> capture;

  bool matches(const Tree& node) const;
};

struct Pattern;

struct Constraint {
  RelationOp relation;
  bool negated = false;
  // Heap-allocated to break the recursive type; never null.
  std::shared_ptr<Pattern> operand;
};

struct Pattern {
  NodeDesc root;
  std::vector<Constraint> constraints;
};

/// Capture name -> node_id, plus the node matched by the pattern root.
struct MatchBinding {
  int root_id = 0;
  std::map<std::string, int> captures;
};

/// Parse the pattern grammar: nodedesc ([!]relation operand)*, where an
/// operand is a nodedesc or a parenthesized sub-pattern. Chained constraints
/// attach to the nearest enclosing pattern root. Throws Error with the
/// character offset on syntax errors.
Pattern parse_pattern(const std::string& text);

/// All capture names appearing in a pattern (positive constraints only).
std::vector<std::string> capture_names(const Pattern& pattern);

/// First binding in pre-order over candidate root nodes.
std::optional<MatchBinding> match_first(const Pattern& pattern, const Tree& tree);

/// All bindings with distinct root nodes, in pre-order. Ties inside one root
/// candidate resolve by pre-order of capture assignments.
std::vector<MatchBinding> match_all(const Pattern& pattern, const Tree& tree);

}  // namespace clneg
