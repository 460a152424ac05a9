#include "clneg/query.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>

namespace clneg {

std::string relation_name(RelationOp op) {
  switch (op) {
    case RelationOp::Child: return "<";
    case RelationOp::Dominates: return "<<";
    case RelationOp::LeftmostDesc: return "<<,";
    case RelationOp::RightmostDesc: return "<<-";
    case RelationOp::LastChild: return "<-";
    case RelationOp::Parent: return ">";
    case RelationOp::Ancestor: return ">>";
    case RelationOp::Sister: return "$";
  }
  return "?";
}

namespace {

bool alt_matches(const std::string& alt, const std::string& s) {
  if (!alt.empty() && alt.back() == '*')
    return s.compare(0, alt.size() - 1, alt, 0, alt.size() - 1) == 0;
  return s == alt;
}

}  // namespace

bool NodeDesc::matches(const Tree& node) const {
  if (alternatives.empty()) return true;
  for (const std::string& alt : alternatives) {
    if (alt_matches(alt, node.label)) return true;
    if (node.token && alt_matches(alt, *node.token)) return true;
  }
  return false;
}

namespace {

struct PatternParser {
  const std::string& text;
  size_t pos = 0;
  std::set<std::string> seen_captures;

  explicit PatternParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("pattern syntax error at offset " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  bool is_desc_char(char c) const {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
           c != '<' && c != '>' && c != '$' && c != '!' && c != '=' && c != '/';
  }

  std::optional<RelationOp> try_relation() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    if (text.compare(pos, 3, "<<,") == 0) { pos += 3; return RelationOp::LeftmostDesc; }
    if (text.compare(pos, 3, "<<-") == 0) { pos += 3; return RelationOp::RightmostDesc; }
    if (text.compare(pos, 2, "<<") == 0) { pos += 2; return RelationOp::Dominates; }
    if (text.compare(pos, 2, "<-") == 0) { pos += 2; return RelationOp::LastChild; }
    if (text.compare(pos, 2, ">>") == 0) { pos += 2; return RelationOp::Ancestor; }
    if (text[pos] == '<') { pos += 1; return RelationOp::Child; }
    if (text[pos] == '>') { pos += 1; return RelationOp::Parent; }
    if (text[pos] == '$') { pos += 1; return RelationOp::Sister; }
    return std::nullopt;
  }

  NodeDesc desc() {
    skip_ws();
    NodeDesc d;
    if (pos >= text.size()) fail("expected node description");
    if (text[pos] == '/') {
      ++pos;
      size_t close = text.find('/', pos);
      if (close == std::string::npos) fail("unterminated /.../ alternation");
      std::string body = text.substr(pos, close - pos);
      pos = close + 1;
      size_t begin = 0;
      while (true) {
        size_t bar = body.find('|', begin);
        std::string alt = body.substr(begin, bar == std::string::npos ? bar : bar - begin);
        if (alt.empty()) fail("empty alternative in /.../");
        d.alternatives.push_back(alt);
        if (bar == std::string::npos) break;
        begin = bar + 1;
      }
    } else if (text.compare(pos, 2, "__") == 0) {
      pos += 2;  // wildcard
    } else {
      size_t begin = pos;
      while (pos < text.size() && is_desc_char(text[pos])) ++pos;
      if (pos == begin) fail("expected node description");
      d.alternatives.push_back(text.substr(begin, pos - begin));
    }
    if (pos < text.size() && text[pos] == '=') {
      ++pos;
      size_t begin = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_')) {
        ++pos;
      }
      if (pos == begin) fail("expected capture name after '='");
      d.capture = text.substr(begin, pos - begin);
      if (!seen_captures.insert(*d.capture).second)
        fail("duplicate capture name '" + *d.capture + "'");
    }
    return d;
  }

  Pattern operand() {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Pattern p = pattern(/*stop_at_paren=*/true);
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return p;
    }
    Pattern p;
    p.root = desc();
    return p;
  }

  Pattern pattern(bool stop_at_paren) {
    Pattern p;
    p.root = desc();
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (stop_at_paren && text[pos] == ')') break;
      bool negated = false;
      if (text[pos] == '!') {
        ++pos;
        negated = true;
      }
      auto rel = try_relation();
      if (!rel) {
        if (negated) fail("expected relation after '!'");
        fail("expected relation operator");
      }
      skip_ws();
      if (pos >= text.size() || (stop_at_paren && text[pos] == ')'))
        fail("missing operand after relation");
      Constraint c;
      c.relation = *rel;
      c.negated = negated;
      c.operand = std::make_shared<Pattern>(operand());
      p.constraints.push_back(std::move(c));
    }
    return p;
  }
};

void collect_captures(const Pattern& p, std::vector<std::string>& out) {
  if (p.root.capture) out.push_back(*p.root.capture);
  for (const Constraint& c : p.constraints) {
    if (!c.negated) collect_captures(*c.operand, out);
  }
}

// Indexed view of a tree for relation tests.
struct TreeIndex {
  std::vector<const Tree*> preorder;
  std::map<int, const Tree*> parent;  // node_id -> parent node

  explicit TreeIndex(const Tree& root) {
    walk(root, nullptr);
  }

  void walk(const Tree& node, const Tree* par) {
    preorder.push_back(&node);
    if (par) parent[node.node_id] = par;
    for (const Tree& c : node.children) walk(c, &node);
  }

  const Tree* parent_of(const Tree& n) const {
    auto it = parent.find(n.node_id);
    return it == parent.end() ? nullptr : it->second;
  }

  bool dominates(const Tree& a, const Tree& b) const {
    const Tree* p = parent_of(b);
    while (p) {
      if (p->node_id == a.node_id) return true;
      p = parent_of(*p);
    }
    return false;
  }

  bool holds(const Tree& a, RelationOp op, const Tree& b) const {
    switch (op) {
      case RelationOp::Child:
        for (const Tree& c : a.children)
          if (c.node_id == b.node_id) return true;
        return false;
      case RelationOp::Dominates:
        return dominates(a, b);
      case RelationOp::LeftmostDesc: {
        const Tree* n = &a;
        while (!n->children.empty()) {
          n = &n->children.front();
          if (n->node_id == b.node_id) return true;
        }
        return false;
      }
      case RelationOp::RightmostDesc: {
        const Tree* n = &a;
        while (!n->children.empty()) {
          n = &n->children.back();
          if (n->node_id == b.node_id) return true;
        }
        return false;
      }
      case RelationOp::LastChild:
        return !a.children.empty() && a.children.back().node_id == b.node_id;
      case RelationOp::Parent: {
        const Tree* p = parent_of(a);
        return p && p->node_id == b.node_id;
      }
      case RelationOp::Ancestor:
        return dominates(b, a);
      case RelationOp::Sister: {
        const Tree* pa = parent_of(a);
        const Tree* pb = parent_of(b);
        return pa && pb && pa->node_id == pb->node_id && a.node_id != b.node_id;
      }
    }
    return false;
  }
};

using Bindings = std::map<std::string, int>;

bool satisfy(const TreeIndex& idx, const Tree& node, const Pattern& p, Bindings& bindings);

bool satisfy_constraints(const TreeIndex& idx, const Tree& node, const Pattern& p,
                         size_t ci, Bindings& bindings) {
  if (ci == p.constraints.size()) return true;
  const Constraint& c = p.constraints[ci];
  if (c.negated) {
    for (const Tree* m : idx.preorder) {
      if (!idx.holds(node, c.relation, *m)) continue;
      Bindings scratch = bindings;
      if (satisfy(idx, *m, *c.operand, scratch)) return false;
    }
    return satisfy_constraints(idx, node, p, ci + 1, bindings);
  }
  for (const Tree* m : idx.preorder) {
    if (!idx.holds(node, c.relation, *m)) continue;
    Bindings saved = bindings;
    if (satisfy(idx, *m, *c.operand, bindings) &&
        satisfy_constraints(idx, node, p, ci + 1, bindings)) {
      return true;
    }
    bindings = saved;
  }
  return false;
}

bool satisfy(const TreeIndex& idx, const Tree& node, const Pattern& p, Bindings& bindings) {
  if (!p.root.matches(node)) return false;
  Bindings saved = bindings;
  if (p.root.capture) {
    auto it = bindings.find(*p.root.capture);
    if (it != bindings.end() && it->second != node.node_id) return false;
    bindings[*p.root.capture] = node.node_id;
  }
  if (satisfy_constraints(idx, node, p, 0, bindings)) return true;
  bindings = saved;
  return false;
}

}  // namespace

Pattern parse_pattern(const std::string& text) {
  PatternParser parser(text);
  if (parser.at_end()) parser.fail("empty pattern");
  Pattern p = parser.pattern(/*stop_at_paren=*/false);
  return p;
}

std::vector<std::string> capture_names(const Pattern& pattern) {
  std::vector<std::string> out;
  collect_captures(pattern, out);
  return out;
}

std::vector<MatchBinding> match_all(const Pattern& pattern, const Tree& tree) {
  TreeIndex idx(tree);
  std::vector<MatchBinding> out;
  for (const Tree* node : idx.preorder) {
    Bindings bindings;
    if (satisfy(idx, *node, pattern, bindings)) {
      MatchBinding b;
      b.root_id = node->node_id;
      b.captures = std::move(bindings);
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::optional<MatchBinding> match_first(const Pattern& pattern, const Tree& tree) {
  TreeIndex idx(tree);
  for (const Tree* node : idx.preorder) {
    Bindings bindings;
    if (satisfy(idx, *node, pattern, bindings)) {
      MatchBinding b;
      b.root_id = node->node_id;
      b.captures = std::move(bindings);
      return b;
    }
  }
  return std::nullopt;
}

}  // namespace clneg
