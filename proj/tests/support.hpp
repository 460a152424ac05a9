// Shared helpers for the test suite: random generators and independent
// brute-force oracles the fast implementations are checked against.
#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clneg/concepts.hpp"
#include "clneg/query.hpp"
#include "clneg/tree.hpp"

namespace testsupport {

using namespace clneg;

inline const std::vector<std::string>& labels() {
  static const std::vector<std::string> v{"S", "NP", "VP", "PP", "ADJP", "SBAR",
                                          "DT", "NN", "JJ", "VB", "RB", "IN"};
  return v;
}

inline const std::vector<std::string>& words() {
  static const std::vector<std::string> v{"no",   "evidence", "of",    "dvt",  "the",
                                          "pain", "not",      "seen",  "was",  "ruled",
                                          "out",  "fever",    "chest", "x"};
  return v;
}

/// Random tree with at most `max_nodes` nodes, leaf-iff-token.
inline Tree random_tree(std::mt19937& rng, int max_nodes) {
  struct Builder {
    std::mt19937& rng;
    int budget;
    Tree build(int depth) {
      Tree t;
      --budget;
      bool leaf = depth >= 4 || budget <= 1 ||
                  std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      if (leaf) {
        t.label = labels()[std::uniform_int_distribution<size_t>(6, labels().size() - 1)(rng)];
        t.token = words()[std::uniform_int_distribution<size_t>(0, words().size() - 1)(rng)];
        return t;
      }
      t.label = labels()[std::uniform_int_distribution<size_t>(0, 5)(rng)];
      int kids = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < kids && budget > 0; ++i) t.children.push_back(build(depth + 1));
      if (t.children.empty()) {
        t.token = words()[std::uniform_int_distribution<size_t>(0, words().size() - 1)(rng)];
      }
      return t;
    }
  };
  Builder b{rng, max_nodes};
  Tree t = b.build(0);
  // Normalize ids by a serialize/parse round trip.
  return parse_ptb(to_ptb(t));
}

/// Random pattern over the eight relations. Depth-limited.
inline Pattern random_pattern(std::mt19937& rng, int depth = 0) {
  auto random_desc = [&]() {
    NodeDesc d;
    int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    if (kind == 0) return d;  // wildcard
    int n = kind == 3 ? 2 : 1;
    for (int i = 0; i < n; ++i) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        d.alternatives.push_back(
            labels()[std::uniform_int_distribution<size_t>(0, labels().size() - 1)(rng)]);
      } else {
        d.alternatives.push_back(
            words()[std::uniform_int_distribution<size_t>(0, words().size() - 1)(rng)]);
      }
    }
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) d.alternatives.back() += "*";
    return d;
  };
  Pattern p;
  p.root = random_desc();
  int constraints = std::uniform_int_distribution<int>(0, depth >= 2 ? 1 : 2)(rng);
  for (int i = 0; i < constraints; ++i) {
    Constraint c;
    c.relation = static_cast<RelationOp>(std::uniform_int_distribution<int>(0, 7)(rng));
    c.negated = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    c.operand = std::make_shared<Pattern>(
        depth >= 2 ? Pattern{random_desc(), {}} : random_pattern(rng, depth + 1));
    p.constraints.push_back(std::move(c));
  }
  return p;
}

// ---- naive pattern matching oracle -----------------------------------------

inline void collect_nodes(const Tree& t, std::vector<const Tree*>& out) {
  out.push_back(&t);
  for (const Tree& c : t.children) collect_nodes(c, out);
}

inline void collect_parents(const Tree& t, const Tree* parent,
                            std::map<const Tree*, const Tree*>& out) {
  out[&t] = parent;
  for (const Tree& c : t.children) collect_parents(c, &t, out);
}

inline bool naive_dominates(const Tree* a, const Tree* b) {
  if (a == b) return false;
  for (const Tree& c : a->children) {
    if (&c == b || naive_dominates(&c, b)) return true;
  }
  return false;
}

inline bool naive_chain(const Tree* a, const Tree* b, bool leftmost) {
  const Tree* cur = a;
  while (!cur->children.empty()) {
    cur = leftmost ? &cur->children.front() : &cur->children.back();
    if (cur == b) return true;
  }
  return false;
}

inline bool naive_relation(const Tree* a, const Tree* b,
                           const std::map<const Tree*, const Tree*>& parents,
                           RelationOp op) {
  switch (op) {
    case RelationOp::Child:
      for (const Tree& c : a->children)
        if (&c == b) return true;
      return false;
    case RelationOp::Dominates:
      return naive_dominates(a, b);
    case RelationOp::LeftmostDesc:
      return naive_chain(a, b, true);
    case RelationOp::RightmostDesc:
      return naive_chain(a, b, false);
    case RelationOp::LastChild:
      return !a->children.empty() && &a->children.back() == b;
    case RelationOp::Parent:
      return parents.at(a) == b;
    case RelationOp::Ancestor:
      return b != a && naive_dominates(b, a);
    case RelationOp::Sister: {
      const Tree* pa = parents.at(a);
      return pa != nullptr && pa == parents.at(b) && a != b;
    }
  }
  return false;
}

inline bool naive_satisfies(const Tree* node, const Pattern& p,
                            const std::vector<const Tree*>& nodes,
                            const std::map<const Tree*, const Tree*>& parents) {
  if (!p.root.matches(*node)) return false;
  for (const Constraint& c : p.constraints) {
    bool found = false;
    for (const Tree* other : nodes) {
      if (naive_relation(node, other, parents, c.relation) &&
          naive_satisfies(other, *c.operand, nodes, parents)) {
        found = true;
        break;
      }
    }
    if (found == c.negated) return false;
  }
  return true;
}

/// Ids of all nodes where the pattern matches, in pre-order.
inline std::vector<int> naive_match_roots(const Pattern& p, const Tree& tree) {
  std::vector<const Tree*> nodes;
  collect_nodes(tree, nodes);
  std::map<const Tree*, const Tree*> parents;
  collect_parents(tree, nullptr, parents);
  std::vector<int> roots;
  for (const Tree* n : nodes)
    if (naive_satisfies(n, p, nodes, parents)) roots.push_back(n->node_id);
  return roots;
}

// ---- concept longest-span oracle -------------------------------------------

struct OracleSpan {
  int start, end, dict_index;
};

/// Enumerate all matches, then greedily keep maximal-length non-nested spans
/// left to right (ties: leftmost, then file order).
inline std::vector<OracleSpan> oracle_spans(const std::vector<std::string>& tokens,
                                            const std::vector<ConceptEntry>& dict) {
  std::vector<std::string> lower;
  for (const std::string& t : tokens) lower.push_back(lowercase(t));
  std::vector<OracleSpan> all;
  for (size_t d = 0; d < dict.size(); ++d) {
    const auto& surf = dict[d].surface;
    for (size_t i = 0; i + surf.size() <= lower.size(); ++i) {
      bool ok = true;
      for (size_t k = 0; k < surf.size(); ++k)
        if (lower[i + k] != surf[k]) {
          ok = false;
          break;
        }
      if (ok) all.push_back({(int)i, (int)(i + surf.size() - 1), (int)d});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const OracleSpan& a, const OracleSpan& b) {
    int la = a.end - a.start, lb = b.end - b.start;
    if (la != lb) return la > lb;
    if (a.start != b.start) return a.start < b.start;
    return a.dict_index < b.dict_index;
  });
  std::vector<OracleSpan> kept;
  for (const OracleSpan& s : all) {
    bool contained = false;
    for (const OracleSpan& k : kept)
      if (s.start >= k.start && s.end <= k.end) {
        contained = true;
        break;
      }
    if (!contained) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(),
            [](const OracleSpan& a, const OracleSpan& b) { return a.start < b.start; });
  return kept;
}

inline std::string data_dir() { return CLNEG_DATA_DIR; }

}  // namespace testsupport
