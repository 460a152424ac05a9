#include "clneg/detector.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace clneg {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Rule rule_from_record(const std::map<std::string, std::string>& fields,
                      const std::string& origin) {
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw Error(origin + ": missing field '" + key + "'");
    return it->second;
  };
  Rule rule;
  rule.name = need("name");
  std::string type = need("type");
  if (type != "ANY") rule.phrase_type = parse_phrase_type(type);
  try {
    rule.pattern = parse_pattern(need("pattern"));
    auto script_it = fields.find("script");
    rule.script = parse_script(script_it == fields.end() ? "" : script_it->second);
  } catch (const Error& e) {
    throw Error(origin + ": rule '" + rule.name + "': " + e.what());
  }
  rule.concept_capture = need("concept");
  rule.priority = std::stoi(need("priority"));

  std::vector<std::string> captures = capture_names(rule.pattern);
  auto bound = [&](const std::string& name) {
    return std::find(captures.begin(), captures.end(), name) != captures.end();
  };
  if (!bound(rule.concept_capture))
    throw Error(origin + ": rule '" + rule.name + "': concept capture '" +
                rule.concept_capture + "' not bound by the pattern");
  for (const SurgeryOp& op : rule.script.ops) {
    for (const std::string& arg : op.args) {
      if (!bound(arg))
        throw Error(origin + ": rule '" + rule.name + "': script capture '" + arg +
                    "' not bound by the pattern");
    }
  }
  return rule;
}

bool has_label(const Tree& t, const std::string& label) {
  if (t.label == label) return true;
  for (const Tree& c : t.children)
    if (has_label(c, label)) return true;
  return false;
}

std::pair<int, int> trigger_char_span(const std::string& sentence, const TriggerMatch& m) {
  std::vector<TokenSpan> spans = tokenize_with_spans(sentence);
  return {spans[m.token_start].start, spans[m.token_end].end};
}

}  // namespace

std::vector<Rule> parse_rules(const std::string& content, const std::string& origin) {
  std::vector<Rule> rules;
  std::istringstream in(content);
  std::string line;
  std::map<std::string, std::string> fields;
  auto flush = [&]() {
    if (fields.empty()) return;
    rules.push_back(rule_from_record(fields, origin));
    fields.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw Error(origin + ": expected 'key: value' line: " + t);
    fields[trim(t.substr(0, colon))] = trim(t.substr(colon + 1));
  }
  flush();
  std::stable_sort(rules.begin(), rules.end(),
                   [](const Rule& a, const Rule& b) { return a.priority < b.priority; });
  return rules;
}

std::vector<Rule> load_rules(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open rules file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_rules(ss.str(), path);
}

std::set<std::string> load_stopwords(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open stopword file: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    words.insert(lowercase(t));
  }
  return words;
}

std::vector<std::string> strip_split_trigger(const std::vector<std::string>& tokens,
                                             const TriggerTerm& trigger) {
  std::set<std::string> trig(trigger.tokens.begin(), trigger.tokens.end());
  size_t i = 0;
  while (i < tokens.size() && trig.count(lowercase(tokens[i]))) ++i;
  return {tokens.begin() + i, tokens.end()};
}

std::vector<std::string> cleanup_yield(const std::vector<std::string>& tokens,
                                       const TriggerTerm& trigger, const Lexicon& lexicon,
                                       const std::set<std::string>& stopwords) {
  size_t i = 0;
  // Remove the trigger phrase when it survived extraction as a prefix.
  if (tokens.size() >= trigger.tokens.size()) {
    bool prefix = true;
    for (size_t k = 0; k < trigger.tokens.size(); ++k) {
      if (lowercase(tokens[k]) != trigger.tokens[k]) {
        prefix = false;
        break;
      }
    }
    if (prefix) i = trigger.tokens.size();
  }
  while (i < tokens.size()) {
    std::string w = lowercase(tokens[i]);
    if (stopwords.count(w) || lexicon.is_single_token_term(w)) {
      ++i;
    } else {
      break;
    }
  }
  return {tokens.begin() + i, tokens.end()};
}

namespace {

struct RuleApplication {
  Tree extracted;
  std::string rule_name;
};

std::optional<RuleApplication> apply_rule(const Rule& rule, const Tree& tree) {
  auto binding = match_first(rule.pattern, tree);
  if (!binding) return std::nullopt;
  Tree post = run_script(tree, *binding, rule.script);
  auto concept_it = binding->captures.find(rule.concept_capture);
  if (concept_it == binding->captures.end()) return std::nullopt;
  if (!find_node(post, concept_it->second)) return std::nullopt;  // removed by surgery
  return RuleApplication{extract(post, concept_it->second), rule.name};
}

}  // namespace

std::vector<NegationResult> detect(const std::string& sentence, const TreeProvider& provider,
                                   const Lexicon& lexicon, const std::vector<Rule>& rules,
                                   const std::set<std::string>& stopwords) {
  std::vector<std::string> tokens = whitespace_tokens(sentence);
  std::vector<NegationResult> results;

  for (const PrunedFragment& fragment : prune_all(tokens, lexicon)) {
    std::string text = fragment.text();
    const Tree* gold = provider.tree_for(text);
    if (!gold) throw MissingTreeError("no tree available for fragment: '" + text + "'");

    Tree current = *gold;
    // Pre-cleanup exception rules (forced SBAR removal) run while they match.
    for (const Rule& rule : rules) {
      if (rule.phrase_type || rule.priority != 0) continue;
      for (int guard = 0; guard < 100; ++guard) {
        auto binding = match_first(rule.pattern, current);
        if (!binding) break;
        Tree next = run_script(current, *binding, rule.script);
        if (tree_equal(next, current)) break;
        current = std::move(next);
      }
    }

    std::optional<RuleApplication> applied;
    for (const Rule& rule : rules) {
      if (!rule.phrase_type || *rule.phrase_type != fragment.trigger.term.phrase_type)
        continue;
      applied = apply_rule(rule, current);
      if (applied) break;
    }
    // Fallback exception rules for fragmented parses without an S node.
    if (!applied && !has_label(current, "S")) {
      for (const Rule& rule : rules) {
        if (rule.phrase_type || rule.priority == 0) continue;
        applied = apply_rule(rule, current);
        if (applied) break;
      }
    }

    NegationResult result;
    result.sentence = sentence;
    result.trigger = fragment.trigger;
    result.fragment = fragment;
    result.tree = current;
    result.possible = is_possible(fragment.trigger.term.location);
    if (applied) {
      result.extracted = std::move(applied->extracted);
      result.rule_name = applied->rule_name;
      result.negated_tokens =
          cleanup_yield(yield_tokens(result.extracted), fragment.trigger.term, lexicon,
                        stopwords);
    } else {
      result.extracted = current;
      result.rule_name = "UNMATCHED";
    }
    if (result.negated_tokens.empty()) {
      result.span = trigger_char_span(sentence, fragment.trigger);
    } else {
      result.span = char_span(sentence, result.negated_tokens);
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace clneg
