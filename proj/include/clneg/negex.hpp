#pragma once

#include <set>
#include <string>
#include <vector>

#include "clneg/lexicon.hpp"

namespace clneg {

/// Window-based baseline configuration.
struct WindowConfig {
  int window = 5;
  std::set<std::string> terminators{".", ",", ";", ":"};
};

struct NegexScope {
  TriggerMatch trigger;
  int scope_start = 0;  // 0-based inclusive; start > end means empty scope
  int scope_end = -1;
};

/// For each non-PSEU trigger: PREN/PREP scope is up to `window` tokens after
/// the trigger, truncated at the first terminator or next trigger; POSN/POSP
/// scope is up to `window` tokens before, truncated at the nearest preceding
/// terminator or trigger. The trigger tokens themselves are excluded.
std::vector<NegexScope> negex_detect(const std::vector<std::string>& tokens,
                                     const Lexicon& lexicon, const WindowConfig& cfg);

}  // namespace clneg
