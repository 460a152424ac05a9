#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clneg/lexicon.hpp"
#include "clneg/pruner.hpp"
#include "clneg/query.hpp"
#include "clneg/surgery.hpp"
#include "clneg/tree.hpp"

namespace clneg {

/// A tree pattern plus surgery/extraction keyed to a phrase-structure type.
/// Rules with phrase_type unset (file value "ANY") are exception rules:
/// priority 0 runs as pre-cleanup on every fragment tree (repeatedly, while
/// it matches); higher priorities run as fallback when the phrase-type rule
/// found no match and the tree lacks an S node.
struct Rule {
  std::string name;
  std::optional<PhraseType> phrase_type;  // nullopt == ANY
  Pattern pattern;
  SurgeryScript script;
  std::string concept_capture;
  int priority = 0;
};

/// Load the rules file: blank-line-separated records with `name:`, `type:`,
/// `pattern:`, `script:`, `concept:`, `priority:` lines. Result is sorted by
/// priority (exception rules first), ties by file order.
std::vector<Rule> load_rules(const std::string& path);
std::vector<Rule> parse_rules(const std::string& content, const std::string& origin);

struct NegationResult {
  std::string sentence;
  TriggerMatch trigger;
  PrunedFragment fragment;
  Tree tree;       // fragment tree after pre-cleanup surgery
  Tree extracted;  // extracted concept subtree (TOP-rooted)
  std::vector<std::string> negated_tokens;
  std::pair<int, int> span{0, 0};  // 1-based chars in the original sentence
  bool possible = false;
  std::string rule_name;

  bool matched() const { return !negated_tokens.empty() && rule_name != "UNMATCHED"; }
};

/// Drop leading tokens that belong to the trigger term, regardless of how
/// the parse split the trigger across constituents.
std::vector<std::string> strip_split_trigger(const std::vector<std::string>& tokens,
                                             const TriggerTerm& trigger);

/// Post-extraction cleanup: remove the full trigger phrase when it prefixes
/// the yield, then drop leading tokens that are standalone lexicon terms or
/// stopwords.
std::vector<std::string> cleanup_yield(const std::vector<std::string>& tokens,
                                       const TriggerTerm& trigger, const Lexicon& lexicon,
                                       const std::set<std::string>& stopwords);

/// Load one lowercase word per line, `#` comments allowed.
std::set<std::string> load_stopwords(const std::string& path);

/// Full fragment pipeline: prune, look up the fragment tree, apply exception
/// and phrase-type rules, extract, clean up, compute the span in the
/// original sentence. Throws MissingTreeError when a fragment has no tree.
std::vector<NegationResult> detect(const std::string& sentence, const TreeProvider& provider,
                                   const Lexicon& lexicon, const std::vector<Rule>& rules,
                                   const std::set<std::string>& stopwords);

}  // namespace clneg
