#include "clneg/concepts.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace clneg {

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

bool valid_tui(const std::string& tui) {
  return tui.size() == 4 && tui[0] == 'T' && std::isdigit((unsigned char)tui[1]) &&
         std::isdigit((unsigned char)tui[2]) && std::isdigit((unsigned char)tui[3]);
}

}  // namespace

std::vector<ConceptEntry> load_dictionary(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open dictionary file: " + path);
  std::vector<ConceptEntry> dict;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split_tab(line);
    if (fields.size() != 4)
      throw Error(path + ":" + std::to_string(lineno) + ": expected 4 tab-separated fields");
    ConceptEntry entry;
    std::istringstream words(lowercase(fields[0]));
    std::string w;
    while (words >> w) entry.surface.push_back(w);
    if (entry.surface.empty())
      throw Error(path + ":" + std::to_string(lineno) + ": empty surface");
    entry.cui = fields[1];
    entry.preferred = fields[2];
    entry.tui = fields[3];
    if (entry.cui.empty())
      throw Error(path + ":" + std::to_string(lineno) + ": empty cui");
    if (!valid_tui(entry.tui))
      throw Error(path + ":" + std::to_string(lineno) + ": malformed tui '" + entry.tui +
                  "' (expected T followed by 3 digits)");
    dict.push_back(std::move(entry));
  }
  return dict;
}

SemanticGroups load_semantic_groups(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open semantic groups file: " + path);
  SemanticGroups groups;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split_tab(line);
    if (fields.size() != 2)
      throw Error(path + ":" + std::to_string(lineno) + ": expected 2 tab-separated fields");
    std::set<std::string>& tuis = groups.groups[fields[0]];
    std::istringstream in(fields[1]);
    std::string tui;
    while (std::getline(in, tui, ',')) {
      if (!valid_tui(tui))
        throw Error(path + ":" + std::to_string(lineno) + ": malformed tui '" + tui + "'");
      tuis.insert(tui);
    }
  }
  return groups;
}

std::vector<ConceptMention> identify(const std::string& sentence,
                                     const std::vector<std::string>& tokens,
                                     const std::vector<ConceptEntry>& dict) {
  std::vector<std::string> lower;
  lower.reserve(tokens.size());
  for (const std::string& t : tokens) lower.push_back(lowercase(t));

  struct RawMatch {
    int start, end;  // token range, inclusive
    int dict_index;
  };
  std::vector<RawMatch> raw;
  for (size_t d = 0; d < dict.size(); ++d) {
    const std::vector<std::string>& surf = dict[d].surface;
    if (surf.size() > lower.size()) continue;
    for (size_t i = 0; i + surf.size() <= lower.size(); ++i) {
      if (std::equal(surf.begin(), surf.end(), lower.begin() + i))
        raw.push_back({(int)i, (int)(i + surf.size() - 1), (int)d});
    }
  }
  // Longest span wins; ties leftmost, then dictionary file order.
  std::stable_sort(raw.begin(), raw.end(), [](const RawMatch& a, const RawMatch& b) {
    int la = a.end - a.start, lb = b.end - b.start;
    if (la != lb) return la > lb;
    if (a.start != b.start) return a.start < b.start;
    return a.dict_index < b.dict_index;
  });

  struct Accepted {
    RawMatch match;
    std::vector<std::string> alt_cuis;
  };
  std::vector<Accepted> accepted;
  for (const RawMatch& m : raw) {
    bool nested = false;
    for (Accepted& a : accepted) {
      if (m.start >= a.match.start && m.end <= a.match.end) {
        // Same span, later dictionary row: record an alternative reading.
        if (m.start == a.match.start && m.end == a.match.end &&
            dict[m.dict_index].cui != dict[a.match.dict_index].cui) {
          a.alt_cuis.push_back(dict[m.dict_index].cui);
        }
        nested = true;
        break;
      }
    }
    if (!nested) accepted.push_back({m, {}});
  }
  std::sort(accepted.begin(), accepted.end(), [](const Accepted& a, const Accepted& b) {
    return a.match.start < b.match.start;
  });

  std::vector<TokenSpan> spans = tokenize_with_spans(sentence);
  std::vector<ConceptMention> mentions;
  for (const Accepted& a : accepted) {
    const ConceptEntry& e = dict[a.match.dict_index];
    ConceptMention m;
    m.token_start = a.match.start;
    m.token_end = a.match.end;
    m.char_span = {spans[a.match.start].start, spans[a.match.end].end};
    m.cui = e.cui;
    m.preferred = e.preferred;
    m.tui = e.tui;
    m.alt_cuis = a.alt_cuis;
    mentions.push_back(std::move(m));
  }
  return mentions;
}

std::vector<ConceptMention> semantic_filter(const std::vector<ConceptMention>& mentions,
                                            const SemanticGroups& groups) {
  std::vector<ConceptMention> kept;
  for (const ConceptMention& m : mentions)
    if (groups.contains(m.tui)) kept.push_back(m);
  return kept;
}

std::vector<ConceptMention> assign_polarity(const std::vector<ConceptMention>& mentions,
                                            const std::vector<NegationResult>& negs) {
  std::vector<ConceptMention> out = mentions;
  for (ConceptMention& m : out) {
    m.polarity = Polarity::Positive;
    m.possible = false;
    for (const NegationResult& n : negs) {
      if (!n.matched()) continue;
      if (m.char_span.first <= n.span.second && n.span.first <= m.char_span.second) {
        m.polarity = Polarity::Negated;
        m.possible = n.possible;
        break;
      }
    }
  }
  return out;
}

}  // namespace clneg
