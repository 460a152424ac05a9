#include "clneg/eval.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace clneg {

namespace {

void finish(Metrics& m) {
  m.accuracy = (m.tp + m.fp + m.fn) ? (double)m.tp / (m.tp + m.fp + m.fn) : 0.0;
  m.precision = (m.tp + m.fp) ? (double)m.tp / (m.tp + m.fp) : 0.0;
  m.recall = (m.tp + m.fn) ? (double)m.tp / (m.tp + m.fn) : 0.0;
  m.f1 = (m.precision + m.recall) > 0
             ? 2 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
}

bool inside(const std::pair<int, int>& inner, const std::pair<int, int>& outer) {
  return inner.first >= outer.first && inner.second <= outer.second;
}

}  // namespace

std::pair<int, int> phrase_char_span(const std::string& sentence, const std::string& phrase) {
  std::vector<TokenSpan> spans = tokenize_with_spans(sentence);
  std::vector<std::string> want = whitespace_tokens(lowercase(phrase));
  if (want.empty()) throw Error("empty phrase");
  for (size_t i = 0; i + want.size() <= spans.size(); ++i) {
    bool ok = true;
    for (size_t k = 0; k < want.size(); ++k) {
      if (lowercase(spans[i + k].text) != want[k]) {
        ok = false;
        break;
      }
    }
    if (ok) return {spans[i].start, spans[i + want.size() - 1].end};
  }
  throw Error("phrase '" + phrase + "' not found in sentence: '" + sentence + "'");
}

std::vector<EvalRecord> load_eval(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open evaluation file: " + path);
  std::vector<EvalRecord> records;
  EvalRecord current;
  std::string line;
  int lineno = 0;
  auto flush = [&]() {
    if (!current.sentence.empty()) records.push_back(std::move(current));
    current = EvalRecord{};
  };
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    if (current.sentence.empty()) {
      current.sentence = line;
      continue;
    }
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(path + ":" + std::to_string(lineno) +
                  ": expected 'concept<TAB>polarity'");
    GoldConcept gc;
    gc.text = line.substr(0, tab);
    std::string pol = line.substr(tab + 1);
    if (pol == "negated") {
      gc.polarity = Polarity::Negated;
    } else if (pol == "positive") {
      gc.polarity = Polarity::Positive;
    } else {
      throw Error(path + ":" + std::to_string(lineno) + ": unknown polarity '" + pol + "'");
    }
    // Validates the invariant that the concept occurs in the sentence.
    phrase_char_span(current.sentence, gc.text);
    current.gold.push_back(std::move(gc));
  }
  flush();
  return records;
}

Metrics evaluate_negation(const std::vector<EvalRecord>& records, NegMode mode,
                          const PipelineComponents& components, const WindowConfig& cfg) {
  if (records.empty()) throw Error("empty evaluation set");
  Metrics m;
  for (const EvalRecord& rec : records) {
    std::vector<std::pair<int, int>> negated_spans;
    if (mode == NegMode::Syntax) {
      for (const NegationResult& n :
           detect(rec.sentence, *components.provider, *components.lexicon,
                  *components.rules, *components.stopwords)) {
        if (n.matched()) negated_spans.push_back(n.span);
      }
    } else {
      std::vector<TokenSpan> spans = tokenize_with_spans(rec.sentence);
      std::vector<std::string> tokens;
      for (const TokenSpan& t : spans) tokens.push_back(t.text);
      for (const NegexScope& s : negex_detect(tokens, *components.lexicon, cfg)) {
        if (s.scope_start > s.scope_end) continue;
        negated_spans.push_back({spans[s.scope_start].start, spans[s.scope_end].end});
      }
    }
    for (const GoldConcept& gc : rec.gold) {
      if (gc.polarity != Polarity::Negated) continue;
      ++m.total;
      std::pair<int, int> span = phrase_char_span(rec.sentence, gc.text);
      bool captured = std::any_of(negated_spans.begin(), negated_spans.end(),
                                  [&](const auto& ns) { return inside(span, ns); });
      if (captured) {
        ++m.tp;
      } else {
        ++m.fn;
      }
    }
  }
  finish(m);
  return m;
}

Metrics evaluate_concepts(const std::vector<EvalRecord>& records, bool filtering,
                          const PipelineComponents& components) {
  Metrics m;
  for (const EvalRecord& rec : records) {
    std::set<std::pair<int, int>> gold;
    for (const GoldConcept& gc : rec.gold) gold.insert(phrase_char_span(rec.sentence, gc.text));
    m.total += (int)gold.size();

    std::vector<ConceptMention> mentions =
        identify(rec.sentence, whitespace_tokens(rec.sentence), *components.dict);
    if (filtering && components.groups)
      mentions = semantic_filter(mentions, *components.groups);

    std::set<std::pair<int, int>> predicted;
    for (const ConceptMention& cm : mentions) predicted.insert(cm.char_span);
    for (const auto& span : predicted) {
      if (gold.count(span)) {
        ++m.tp;
      } else {
        ++m.fp;
      }
    }
    for (const auto& span : gold) {
      if (!predicted.count(span)) ++m.fn;
    }
  }
  finish(m);
  return m;
}

}  // namespace clneg
