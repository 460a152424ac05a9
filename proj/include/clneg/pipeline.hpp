#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clneg/concepts.hpp"
#include "clneg/detector.hpp"
#include "clneg/negex.hpp"

namespace clneg {

/// Immutable bundle of everything needed to analyze a sentence. All pointers
/// must outlive the pipeline calls; none may be null except dict/groups when
/// concept identification is not requested.
struct PipelineComponents {
  const TreeProvider* provider = nullptr;
  const Lexicon* lexicon = nullptr;
  const std::vector<Rule>* rules = nullptr;
  const std::set<std::string>* stopwords = nullptr;
  const std::vector<ConceptEntry>* dict = nullptr;
  const SemanticGroups* groups = nullptr;
  bool filtering = true;
};

struct SentenceAnalysis {
  std::string sentence;
  std::vector<NegationResult> negations;
  std::vector<ConceptMention> mentions;  // polarity already assigned
};

/// Negation detection plus (when dict is present) concept identification,
/// semantic filtering, and polarity assignment for one sentence.
SentenceAnalysis analyze_sentence(const std::string& sentence,
                                  const PipelineComponents& components);

/// Batch analysis over independent sentences; output order matches input
/// order regardless of scheduling. `parallel` selects the OpenMP path; the
/// serial path is the reference implementation.
std::vector<SentenceAnalysis> analyze_batch(const std::vector<std::string>& sentences,
                                            const PipelineComponents& components,
                                            bool parallel);

/// "Preferred(+)" / "Preferred(-)" comma-joined, mentions in sentence order.
std::string format_mentions(const std::vector<ConceptMention>& mentions);

/// One diagnostic record in the detector's trace layout: `sent:`,
/// `original:`, then per negation `neg part:`, `negated term:`, the matched
/// phrase type, the extracted tree, its cleaned tokens, and the span.
void print_trace(std::ostream& out, int index, const SentenceAnalysis& analysis);

}  // namespace clneg
