#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clneg/detector.hpp"
#include "clneg/tree.hpp"

namespace clneg {

/// One dictionary row: a lowercase surface token sequence mapped to a concept.
struct ConceptEntry {
  std::vector<std::string> surface;
  std::string cui;
  std::string preferred;
  std::string tui;  // semantic type id, T followed by three digits
};

/// Named sets of semantic type ids (TUIs) considered clinically relevant.
struct SemanticGroups {
  std::map<std::string, std::set<std::string>> groups;

  bool contains(const std::string& tui) const {
    for (const auto& [name, tuis] : groups)
      if (tuis.count(tui)) return true;
    return false;
  }
};

enum class Polarity { Positive, Negated };

struct ConceptMention {
  int token_start = 0;  // 0-based inclusive
  int token_end = 0;    // 0-based inclusive
  std::pair<int, int> char_span{0, 0};  // 1-based inclusive chars
  std::string cui;
  std::string preferred;
  std::string tui;
  std::vector<std::string> alt_cuis;  // same surface, later dictionary rows
  Polarity polarity = Polarity::Positive;
  bool possible = false;
};

/// TSV rows `surface<TAB>cui<TAB>preferred<TAB>tui`; surfaces lowercased on
/// load. Malformed TUIs are reported with their line number.
std::vector<ConceptEntry> load_dictionary(const std::string& path);

/// Groups file: `group_name<TAB>comma-separated TUIs`.
SemanticGroups load_semantic_groups(const std::string& path);

/// Case-insensitive longest-span matching over the sentence tokens: matches
/// fully contained in an accepted longer match are discarded; ties go to the
/// leftmost match, then dictionary file order. `sentence` supplies the
/// character spans.
std::vector<ConceptMention> identify(const std::string& sentence,
                                     const std::vector<std::string>& tokens,
                                     const std::vector<ConceptEntry>& dict);

/// Keep mentions whose TUI belongs to any group; order preserved.
std::vector<ConceptMention> semantic_filter(const std::vector<ConceptMention>& mentions,
                                            const SemanticGroups& groups);

/// A mention is negated iff its char span overlaps any result span; the
/// possible flag is copied from the overlapping result.
std::vector<ConceptMention> assign_polarity(const std::vector<ConceptMention>& mentions,
                                            const std::vector<NegationResult>& negs);

}  // namespace clneg
