#include "clneg/pruner.hpp"

namespace clneg {

std::string PrunedFragment::text() const {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::optional<PrunedFragment> prune(const std::vector<std::string>& tokens,
                                    const TriggerMatch& trigger) {
  if (trigger.term.location == NegLocation::PSEU) return std::nullopt;
  PrunedFragment frag;
  frag.trigger = trigger;
  if (is_pre(trigger.term.location)) {
    frag.orig_token_offset = trigger.token_start;
    frag.tokens.assign(tokens.begin() + trigger.token_start, tokens.end());
  } else {
    frag.orig_token_offset = 0;
    frag.tokens.assign(tokens.begin(), tokens.begin() + trigger.token_end + 1);
  }
  return frag;
}

std::vector<PrunedFragment> prune_all(const std::vector<std::string>& tokens,
                                      const Lexicon& lexicon) {
  std::vector<PrunedFragment> out;
  for (const TriggerMatch& m : find_triggers(tokens, lexicon)) {
    if (auto frag = prune(tokens, m)) out.push_back(std::move(*frag));
  }
  return out;
}

}  // namespace clneg
