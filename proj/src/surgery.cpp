#include "clneg/surgery.hpp"

#include <optional>
#include <sstream>

namespace clneg {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Rebuild without the target subtree; nullopt when this node vanishes
// (either it is the target or it is a nonterminal left with no children).
std::optional<Tree> without(const Tree& node, int target_id) {
  if (node.node_id == target_id) return std::nullopt;
  Tree out;
  out.label = node.label;
  out.token = node.token;
  out.node_id = node.node_id;
  for (const Tree& c : node.children) {
    if (auto kept = without(c, target_id)) out.children.push_back(std::move(*kept));
  }
  if (!node.children.empty() && out.children.empty()) return std::nullopt;
  return out;
}

// Rebuild, replacing the `top` child (wherever it occurs) by the given
// replacement nodes. Cascades removal of emptied nonterminals.
std::optional<Tree> splice(const Tree& node, int top_id, const std::vector<Tree>& repl) {
  Tree out;
  out.label = node.label;
  out.token = node.token;
  out.node_id = node.node_id;
  for (const Tree& c : node.children) {
    if (c.node_id == top_id) {
      for (const Tree& r : repl) out.children.push_back(r);
    } else if (auto kept = splice(c, top_id, repl)) {
      out.children.push_back(std::move(*kept));
    }
  }
  if (!node.children.empty() && out.children.empty()) return std::nullopt;
  return out;
}

void renumber(Tree& t, int& next) {
  t.node_id = next++;
  for (Tree& c : t.children) renumber(c, next);
}

bool dominates_or_equal(const Tree& top, int bottom_id) {
  return find_node(top, bottom_id) != nullptr;
}

}  // namespace

SurgeryScript parse_script(const std::string& text) {
  SurgeryScript script;
  std::string body = trim(text);
  if (body.empty()) return script;
  std::istringstream clauses(body);
  std::string clause;
  while (std::getline(clauses, clause, ',')) {
    std::istringstream words(trim(clause));
    std::string verb_word;
    words >> verb_word;
    SurgeryOp op;
    if (verb_word == "delete") op.verb = SurgeryVerb::Delete;
    else if (verb_word == "excise") op.verb = SurgeryVerb::Excise;
    else if (verb_word == "extract") op.verb = SurgeryVerb::Extract;
    else throw Error("unknown surgery verb: '" + verb_word + "'");
    std::string arg;
    while (words >> arg) op.args.push_back(arg);
    size_t want = op.verb == SurgeryVerb::Excise ? 2 : 1;
    if (op.args.size() != want)
      throw Error("surgery verb '" + verb_word + "' takes " + std::to_string(want) +
                  " name(s), got " + std::to_string(op.args.size()));
    script.ops.push_back(std::move(op));
  }
  return script;
}

Tree delete_node(const Tree& tree, int node_id) {
  if (tree.node_id == node_id) throw Error("delete: cannot delete the root");
  if (!find_node(tree, node_id))
    throw Error("delete: node " + std::to_string(node_id) + " not in tree");
  auto out = without(tree, node_id);
  if (!out) throw Error("delete: operation would empty the tree");
  return *out;
}

Tree excise(const Tree& tree, int top_id, int bottom_id) {
  const Tree* top = find_node(tree, top_id);
  if (!top) throw Error("excise: top node not in tree");
  if (!dominates_or_equal(*top, bottom_id))
    throw Error("excise: top does not dominate bottom");
  if (tree.node_id == top_id) throw Error("excise: cannot excise the root");
  const Tree* bottom = find_node(*top, bottom_id);
  auto out = splice(tree, top_id, bottom->children);
  if (!out) throw Error("excise: operation would empty the tree");
  return *out;
}

Tree extract(const Tree& tree, int node_id) {
  const Tree* node = find_node(tree, node_id);
  if (!node) throw Error("extract: node " + std::to_string(node_id) + " not in tree");
  Tree out;
  if (node->node_id == tree.node_id && node->label == "TOP") {
    out = *node;
  } else {
    out.label = "TOP";
    out.children.push_back(*node);
  }
  int next = 0;
  renumber(out, next);
  return out;
}

Tree run_script(const Tree& tree, const MatchBinding& binding, const SurgeryScript& script) {
  Tree current = tree;
  for (const SurgeryOp& op : script.ops) {
    std::vector<int> ids;
    for (const std::string& name : op.args) {
      auto it = binding.captures.find(name);
      if (it == binding.captures.end())
        throw Error("script refers to unbound capture '" + name + "'");
      ids.push_back(it->second);
    }
    switch (op.verb) {
      case SurgeryVerb::Delete:
        current = delete_node(current, ids[0]);
        break;
      case SurgeryVerb::Excise:
        current = excise(current, ids[0], ids[1]);
        break;
      case SurgeryVerb::Extract:
        current = extract(current, ids[0]);
        break;
    }
  }
  return current;
}

}  // namespace clneg
