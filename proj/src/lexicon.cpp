#include "clneg/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace clneg {

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string to_string(NegLocation loc) {
  switch (loc) {
    case NegLocation::PREN: return "PREN";
    case NegLocation::POSN: return "POSN";
    case NegLocation::PREP: return "PREP";
    case NegLocation::POSP: return "POSP";
    case NegLocation::PSEU: return "PSEU";
  }
  return "?";
}

std::string to_string(PhraseType type) {
  switch (type) {
    case PhraseType::NP: return "NP";
    case PhraseType::VP_A: return "VP-A";
    case PhraseType::VP_P: return "VP-P";
    case PhraseType::PP: return "PP";
    case PhraseType::ADJP_A: return "ADJP-A";
    case PhraseType::ADJP_P: return "ADJP-P";
    case PhraseType::ADVP_A: return "ADVP-A";
    case PhraseType::ADVP_P: return "ADVP-P";
    case PhraseType::NONE: return "NONE";
  }
  return "?";
}

NegLocation parse_location(const std::string& s) {
  if (s == "PREN") return NegLocation::PREN;
  if (s == "POSN") return NegLocation::POSN;
  if (s == "PREP") return NegLocation::PREP;
  if (s == "POSP") return NegLocation::POSP;
  if (s == "PSEU") return NegLocation::PSEU;
  throw Error("unknown negation location: '" + s + "'");
}

PhraseType parse_phrase_type(const std::string& s) {
  if (s == "NP") return PhraseType::NP;
  if (s == "VP-A") return PhraseType::VP_A;
  if (s == "VP-P") return PhraseType::VP_P;
  if (s == "PP") return PhraseType::PP;
  if (s == "ADJP-A") return PhraseType::ADJP_A;
  if (s == "ADJP-P") return PhraseType::ADJP_P;
  if (s == "ADVP-A") return PhraseType::ADVP_A;
  if (s == "ADVP-P") return PhraseType::ADVP_P;
  if (s == "NONE") return PhraseType::NONE;
  throw Error("unknown phrase type: '" + s + "'");
}

bool is_pre(NegLocation loc) { return loc == NegLocation::PREN || loc == NegLocation::PREP; }
bool is_post(NegLocation loc) { return loc == NegLocation::POSN || loc == NegLocation::POSP; }
bool is_possible(NegLocation loc) {
  return loc == NegLocation::PREP || loc == NegLocation::POSP;
}

std::string TriggerTerm::text() const {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

void Lexicon::add(TriggerTerm term) {
  if (term.tokens.empty()) throw Error("lexicon term with no tokens");
  if (term.location == NegLocation::PSEU && term.phrase_type != PhraseType::NONE)
    throw Error("pseudonegation '" + term.text() + "' must have phrase type NONE");
  if (!seen_.insert(term.tokens).second)
    throw Error("duplicate lexicon term: '" + term.text() + "'");
  terms_.push_back(std::move(term));
  const TriggerTerm& stored = terms_.back();
  if (stored.tokens.size() == 1) single_words_.insert(stored.tokens[0]);
  // Note: terms_ may reallocate; the index is rebuilt lazily below.
  by_first_token_.clear();
}

const std::vector<const TriggerTerm*>* Lexicon::candidates(
    const std::string& first_token) const {
  if (by_first_token_.empty() && !terms_.empty()) {
    auto& index = const_cast<Lexicon*>(this)->by_first_token_;
    for (const TriggerTerm& t : terms_) index[t.tokens[0]].push_back(&t);
    for (auto& [word, list] : index) {
      std::stable_sort(list.begin(), list.end(),
                       [](const TriggerTerm* a, const TriggerTerm* b) {
                         return a->tokens.size() > b->tokens.size();
                       });
    }
  }
  auto it = by_first_token_.find(first_token);
  return it == by_first_token_.end() ? nullptr : &it->second;
}

bool Lexicon::is_single_token_term(const std::string& lowercase_word) const {
  return single_words_.count(lowercase_word) > 0;
}

std::map<NegLocation, int> Lexicon::category_counts() const {
  std::map<NegLocation, int> counts;
  for (const TriggerTerm& t : terms_) counts[t.location]++;
  return counts;
}

namespace {

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    size_t tab = line.find('\t', begin);
    out.push_back(line.substr(begin, tab == std::string::npos ? tab : tab - begin));
    if (tab == std::string::npos) break;
    begin = tab + 1;
  }
  return out;
}

std::map<NegLocation, int> parse_counts_header(const std::string& line) {
  std::map<NegLocation, int> counts;
  std::istringstream in(line.substr(line.find("counts:") + 7));
  std::string item;
  while (in >> item) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) continue;
    counts[parse_location(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
  }
  return counts;
}

}  // namespace

Lexicon load_lexicon(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open lexicon file: " + path);
  Lexicon lex;
  std::map<NegLocation, int> declared;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("counts:") != std::string::npos) declared = parse_counts_header(line);
      continue;
    }
    std::vector<std::string> fields = split_tab(line);
    if (fields.size() != 4)
      throw Error(path + ":" + std::to_string(lineno) + ": expected 4 tab-separated fields");
    TriggerTerm term;
    std::istringstream words(lowercase(fields[0]));
    std::string w;
    while (words >> w) term.tokens.push_back(w);
    try {
      term.location = parse_location(fields[1]);
      term.phrase_type = parse_phrase_type(fields[2]);
      term.first_pos = fields[3];
      lex.add(std::move(term));
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!declared.empty()) {
    auto actual = lex.category_counts();
    for (const auto& [loc, n] : declared) {
      if (actual[loc] != n) {
        std::cerr << "warning: " << path << ": declared " << to_string(loc) << "=" << n
                  << " but file contains " << actual[loc] << "\n";
      }
    }
  }
  return lex;
}

std::vector<TriggerMatch> find_triggers(const std::vector<std::string>& tokens,
                                        const Lexicon& lexicon) {
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const std::string& t : tokens) lower.push_back(lowercase(t));

  std::vector<TriggerMatch> out;
  size_t i = 0;
  while (i < lower.size()) {
    const auto* cands = lexicon.candidates(lower[i]);
    const TriggerTerm* best = nullptr;
    if (cands) {
      for (const TriggerTerm* term : *cands) {  // sorted longest first
        if (term->tokens.size() > lower.size() - i) continue;
        if (std::equal(term->tokens.begin(), term->tokens.end(), lower.begin() + i)) {
          best = term;
          break;
        }
      }
    }
    if (best) {
      TriggerMatch m;
      m.term = *best;
      m.token_start = static_cast<int>(i);
      m.token_end = static_cast<int>(i + best->tokens.size() - 1);
      out.push_back(std::move(m));
      i += best->tokens.size();
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace clneg
