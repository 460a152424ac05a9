#include "clneg/negex.hpp"

namespace clneg {

std::vector<NegexScope> negex_detect(const std::vector<std::string>& tokens,
                                     const Lexicon& lexicon, const WindowConfig& cfg) {
  if (cfg.window < 1) throw Error("negex window must be >= 1");
  std::vector<TriggerMatch> triggers = find_triggers(tokens, lexicon);

  // Token indexes occupied by any trigger, so scopes stop at neighbors.
  std::vector<bool> in_trigger(tokens.size(), false);
  for (const TriggerMatch& m : triggers)
    for (int i = m.token_start; i <= m.token_end; ++i) in_trigger[i] = true;

  auto is_terminator = [&](int i) { return cfg.terminators.count(lowercase(tokens[i])) > 0; };

  std::vector<NegexScope> out;
  for (const TriggerMatch& m : triggers) {
    if (m.term.location == NegLocation::PSEU) continue;
    NegexScope scope;
    scope.trigger = m;
    if (is_pre(m.term.location)) {
      int i = m.token_end + 1;
      int end = i - 1;
      while (i < (int)tokens.size() && i <= m.token_end + cfg.window && !is_terminator(i) &&
             !in_trigger[i]) {
        end = i++;
      }
      scope.scope_start = m.token_end + 1;
      scope.scope_end = end;
    } else {
      int i = m.token_start - 1;
      int start = i + 1;
      while (i >= 0 && i >= m.token_start - cfg.window && !is_terminator(i) &&
             !in_trigger[i]) {
        start = i--;
      }
      scope.scope_start = start;
      scope.scope_end = m.token_start - 1;
    }
    out.push_back(std::move(scope));
  }
  return out;
}

}  // namespace clneg
