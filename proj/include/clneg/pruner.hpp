#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clneg/lexicon.hpp"

namespace clneg {

/// Contiguous slice of the sentence kept for parsing, anchored on a trigger.
struct PrunedFragment {
  std::vector<std::string> tokens;
  TriggerMatch trigger;
  int orig_token_offset = 0;  // 0-based index of fragment start in the sentence

  std::string text() const;
};

/// PREN/PREP: trigger start through end of sentence. POSN/POSP: sentence
/// start through the trigger's last token. PSEU: no fragment.
std::optional<PrunedFragment> prune(const std::vector<std::string>& tokens,
                                    const TriggerMatch& trigger);

/// One fragment per non-PSEU trigger from find_triggers, in order.
std::vector<PrunedFragment> prune_all(const std::vector<std::string>& tokens,
                                      const Lexicon& lexicon);

}  // namespace clneg
