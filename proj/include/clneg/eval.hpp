#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clneg/negex.hpp"
#include "clneg/pipeline.hpp"

namespace clneg {

struct GoldConcept {
  std::string text;
  Polarity polarity = Polarity::Positive;
};

struct EvalRecord {
  std::string sentence;
  std::vector<GoldConcept> gold;
};

struct Metrics {
  double accuracy = 0, precision = 0, recall = 0, f1 = 0;
  int tp = 0, fp = 0, fn = 0, total = 0;
};

/// Blank-line-separated records: sentence line, then `concept<TAB>polarity`
/// lines with polarity `positive` or `negated`. Every gold concept must
/// occur in its sentence (case-insensitive).
std::vector<EvalRecord> load_eval(const std::string& path);

enum class NegMode { Syntax, Negex };

/// Recall-style accuracy over gold negated concepts: one is captured when
/// its char span lies inside a detected negated span. Throws on an empty
/// record list; syntax mode propagates missing-tree errors.
Metrics evaluate_negation(const std::vector<EvalRecord>& records, NegMode mode,
                          const PipelineComponents& components, const WindowConfig& cfg);

/// Span-level concept identification metrics; accuracy = tp/(tp+fp+fn).
Metrics evaluate_concepts(const std::vector<EvalRecord>& records, bool filtering,
                          const PipelineComponents& components);

/// Char span (1-based inclusive) of the first case-insensitive contiguous
/// token occurrence of `phrase` in `sentence`. Throws when absent.
std::pair<int, int> phrase_char_span(const std::string& sentence, const std::string& phrase);

}  // namespace clneg
