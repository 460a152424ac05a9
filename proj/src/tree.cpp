#include "clneg/tree.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace clneg {

namespace {

struct PtbParser {
  const std::string& text;
  size_t pos = 0;

  explicit PtbParser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("ptb parse error at offset " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string atom() {
    size_t begin = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    if (pos == begin) fail("expected label or token");
    return text.substr(begin, pos - begin);
  }

  Tree node() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    Tree t;
    t.label = atom();
    skip_ws();
    if (pos < text.size() && text[pos] == ')') fail("empty node '" + t.label + "'");
    // Either a single token or a list of child nodes.
    if (pos < text.size() && text[pos] != '(') {
      t.token = atom();
      skip_ws();
      if (pos < text.size() && text[pos] == '(') fail("leaf with children");
    } else {
      while (pos < text.size() && text[pos] == '(') {
        t.children.push_back(node());
        skip_ws();
      }
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    return t;
  }
};

void assign_ids(Tree& t, int& next) {
  t.node_id = next++;
  for (Tree& c : t.children) assign_ids(c, next);
}

void to_ptb_impl(const Tree& t, std::string& out) {
  out += '(';
  out += t.label;
  if (t.token) {
    out += ' ';
    out += *t.token;
  } else {
    for (const Tree& c : t.children) {
      out += ' ';
      to_ptb_impl(c, out);
    }
  }
  out += ')';
}

void yield_impl(const Tree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    if (t.token) out.push_back(*t.token);
    return;
  }
  for (const Tree& c : t.children) yield_impl(c, out);
}

std::string normalize_ws(const std::string& s) {
  std::string out;
  bool in_ws = true;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_ws = true;
    } else {
      if (in_ws && !out.empty()) out += ' ';
      out += c;
      in_ws = false;
    }
  }
  return out;
}

}  // namespace

Tree parse_ptb(const std::string& text) {
  PtbParser p(text);
  Tree t = p.node();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  int next = 0;
  assign_ids(t, next);
  return t;
}

std::string to_ptb(const Tree& tree) {
  std::string out;
  to_ptb_impl(tree, out);
  return out;
}

std::vector<std::string> yield_tokens(const Tree& tree) {
  std::vector<std::string> out;
  yield_impl(tree, out);
  return out;
}

bool tree_equal(const Tree& a, const Tree& b) {
  if (a.label != b.label || a.token != b.token || a.children.size() != b.children.size())
    return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!tree_equal(a.children[i], b.children[i])) return false;
  return true;
}

int node_count(const Tree& tree) {
  int n = 1;
  for (const Tree& c : tree.children) n += node_count(c);
  return n;
}

const Tree* find_node(const Tree& tree, int node_id) {
  if (tree.node_id == node_id) return &tree;
  for (const Tree& c : tree.children) {
    if (const Tree* hit = find_node(c, node_id)) return hit;
  }
  return nullptr;
}

std::vector<TokenSpan> tokenize_with_spans(const std::string& sentence) {
  std::vector<TokenSpan> out;
  size_t i = 0;
  while (i < sentence.size()) {
    if (std::isspace(static_cast<unsigned char>(sentence[i]))) {
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < sentence.size() && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
    out.push_back({sentence.substr(begin, i - begin), static_cast<int>(begin) + 1,
                   static_cast<int>(i)});
  }
  return out;
}

std::vector<std::string> whitespace_tokens(const std::string& sentence) {
  std::vector<std::string> out;
  for (const TokenSpan& t : tokenize_with_spans(sentence)) out.push_back(t.text);
  return out;
}

std::pair<int, int> char_span(const std::string& sentence,
                              const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error("char_span: empty token list");
  std::vector<TokenSpan> sent = tokenize_with_spans(sentence);
  size_t si = 0;
  int start = 0, end = 0;
  for (size_t ti = 0; ti < tokens.size(); ++ti) {
    while (si < sent.size() && sent[si].text != tokens[ti]) ++si;
    if (si == sent.size())
      throw Error("char_span: token '" + tokens[ti] + "' not found in order in sentence");
    if (ti == 0) start = sent[si].start;
    end = sent[si].end;
    ++si;
  }
  return {start, end};
}

const Tree* Treebank::find(const std::string& sentence) const {
  std::string key = normalize_ws(sentence);
  for (const TreebankEntry& e : entries) {
    if (normalize_ws(e.sentence) == key) return &e.tree;
  }
  return nullptr;
}

Treebank parse_treebank(const std::string& content, const std::string& origin) {
  Treebank bank;
  std::istringstream in(content);
  std::string line;
  std::vector<std::string> record;
  size_t index = 0;
  auto flush = [&]() {
    if (record.empty()) return;
    if (record.size() != 2)
      throw Error(origin + ": entry " + std::to_string(index) +
                  " must be two lines (sentence, tree)");
    TreebankEntry e{record[0], parse_ptb(record[1])};
    if (yield_tokens(e.tree) != whitespace_tokens(e.sentence))
      throw Error(origin + ": entry " + std::to_string(index) +
                  ": tree leaves do not match sentence tokens");
    bank.entries.push_back(std::move(e));
    record.clear();
    ++index;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (normalize_ws(line).empty()) {
      flush();
    } else {
      record.push_back(line);
    }
  }
  flush();
  return bank;
}

Treebank load_treebank(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open treebank file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_treebank(ss.str(), path);
}

TreebankProvider::TreebankProvider(Treebank bank) : bank_(std::move(bank)) {}

const Tree* TreebankProvider::tree_for(const std::string& fragment_text) const {
  return bank_.find(fragment_text);
}

CommandProvider::CommandProvider(std::string command) : command_(std::move(command)) {}

const Tree* CommandProvider::tree_for(const std::string& fragment_text) const {
  for (const TreebankEntry& e : cache_) {
    if (e.sentence == fragment_text) return &e.tree;
  }
  std::string cmd = "printf '%s\\n' \"" + fragment_text + "\" | " + command_;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error("tree command failed to start: " + command_);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int rc = pclose(pipe);
  if (rc != 0) throw Error("tree command exited with status " + std::to_string(rc));
  size_t eol = out.find('\n');
  std::string line = eol == std::string::npos ? out : out.substr(0, eol);
  if (line.empty()) return nullptr;
  cache_.push_back({fragment_text, parse_ptb(line)});
  return &cache_.back().tree;
}

}  // namespace clneg
