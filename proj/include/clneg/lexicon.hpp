#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "clneg/error.hpp"

namespace clneg {

/// Where the negated content sits relative to the trigger.
enum class NegLocation { PREN, POSN, PREP, POSP, PSEU };

/// How the trigger relates syntactically to the negated constituent.
enum class PhraseType { NP, VP_A, VP_P, PP, ADJP_A, ADJP_P, ADVP_A, ADVP_P, NONE };

std::string to_string(NegLocation loc);
std::string to_string(PhraseType type);
NegLocation parse_location(const std::string& s);
PhraseType parse_phrase_type(const std::string& s);

bool is_pre(NegLocation loc);       // PREN or PREP
bool is_post(NegLocation loc);      // POSN or POSP
bool is_possible(NegLocation loc);  // PREP or POSP

struct TriggerTerm {
  std::vector<std::string> tokens;  // lowercase
  NegLocation location;
  PhraseType phrase_type;
  std::string first_pos;  // POS tag of the first word; carried as data

  std::string text() const;
};

struct TriggerMatch {
  TriggerTerm term;
  int token_start = 0;  // 0-based
  int token_end = 0;    // 0-based inclusive
};

class Lexicon {
 public:
  void add(TriggerTerm term);  // Error on duplicate token sequence

  const std::vector<TriggerTerm>& terms() const { return terms_; }
  std::map<NegLocation, int> category_counts() const;

  /// True when the word is itself a single-token lexicon term.
  bool is_single_token_term(const std::string& lowercase_word) const;

  /// Longest term starting with the given first token; candidates for
  /// the scanner.
  const std::vector<const TriggerTerm*>* candidates(const std::string& first_token) const;

 private:
  std::vector<TriggerTerm> terms_;
  std::set<std::vector<std::string>> seen_;
  std::map<std::string, std::vector<const TriggerTerm*>> by_first_token_;
  std::set<std::string> single_words_;
};

/// Load the TSV lexicon: `term<TAB>location<TAB>phrase_type<TAB>first_pos`,
/// `#` comment lines, optional `# counts: PREN=.. POSN=.. PREP=.. POSP=..
/// PSEU=..` header. A count mismatch warns on stderr rather than failing;
/// unknown enumerations fail with the line number.
Lexicon load_lexicon(const std::string& path);

/// Non-overlapping longest-leftmost trigger matches, case-insensitive.
/// PSEU matches are returned (they suppress negation downstream).
std::vector<TriggerMatch> find_triggers(const std::vector<std::string>& tokens,
                                        const Lexicon& lexicon);

std::string lowercase(const std::string& s);

}  // namespace clneg
