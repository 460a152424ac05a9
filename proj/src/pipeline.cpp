#include "clneg/pipeline.hpp"

#include <exception>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clneg {

SentenceAnalysis analyze_sentence(const std::string& sentence,
                                  const PipelineComponents& components) {
  SentenceAnalysis out;
  out.sentence = sentence;
  out.negations = detect(sentence, *components.provider, *components.lexicon,
                         *components.rules, *components.stopwords);
  if (components.dict) {
    std::vector<ConceptMention> mentions =
        identify(sentence, whitespace_tokens(sentence), *components.dict);
    if (components.filtering && components.groups)
      mentions = semantic_filter(mentions, *components.groups);
    out.mentions = assign_polarity(mentions, out.negations);
  }
  return out;
}

std::vector<SentenceAnalysis> analyze_batch(const std::vector<std::string>& sentences,
                                            const PipelineComponents& components,
                                            bool parallel) {
  std::vector<SentenceAnalysis> results(sentences.size());
  if (!parallel) {
    for (size_t i = 0; i < sentences.size(); ++i)
      results[i] = analyze_sentence(sentences[i], components);
    return results;
  }
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < (long)sentences.size(); ++i) {
    try {
      results[i] = analyze_sentence(sentences[i], components);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string format_mentions(const std::vector<ConceptMention>& mentions) {
  std::string out;
  for (const ConceptMention& m : mentions) {
    if (!out.empty()) out += ", ";
    out += m.preferred;
    out += m.polarity == Polarity::Negated ? "(-)" : "(+)";
  }
  return out;
}

void print_trace(std::ostream& out, int index, const SentenceAnalysis& analysis) {
  bool negated = false;
  for (const NegationResult& n : analysis.negations)
    if (n.matched()) negated = true;

  out << "sent: " << index << "\n";
  out << "original: " << analysis.sentence;
  if (negated) out << "\t [NEGATED]";
  out << "\n\n";
  for (const NegationResult& n : analysis.negations) {
    out << "neg part: " << n.fragment.text() << "\n";
    out << "negated term: " << n.trigger.term.text() << "\n";
    out << "--- tregex/tsurgeon with negated type: "
        << to_string(n.trigger.term.phrase_type) << "\n";
    if (n.matched()) {
      out << "constituency tree: " << to_ptb(n.extracted) << "\n";
      out << ">> ";
      for (size_t i = 0; i < n.negated_tokens.size(); ++i) {
        if (i) out << ' ';
        out << n.negated_tokens[i];
      }
      out << "\n";
      out << ">> negated span: (" << n.span.first << ", " << n.span.second << ")\n";
    } else {
      out << ">> no rule matched (" << n.rule_name << ")\n";
    }
  }
  out << "\n";
}

}  // namespace clneg
