#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clneg/pipeline.hpp"

namespace clneg {

/// A clinical note split into ordered sections of sentences.
struct NoteDocument {
  std::vector<std::pair<std::string, std::vector<std::string>>> sections;
};

/// Split on `--- Name ---` or `Name:` header lines; headerless leading text
/// goes into a "BODY" section. Sentences split on `.`/`!`/`?` followed by
/// whitespace with a guard for single-letter abbreviations; a trailing
/// terminator attached to the last word becomes its own token.
NoteDocument split_note(const std::string& text);

/// Per-section "Preferred(+|-)" comma-joined lines, document order.
/// Missing-tree errors are rethrown with the offending sentence named.
std::vector<std::pair<std::string, std::string>> summarize(
    const NoteDocument& note, const PipelineComponents& components);

}  // namespace clneg
