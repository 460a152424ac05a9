#include "clneg/note.hpp"

#include <cctype>
#include <sstream>

namespace clneg {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// `--- Name ---` markers.
bool dashed_header(const std::string& line, std::string& name) {
  std::string t = trim(line);
  if (t.size() < 8 || t.compare(0, 4, "--- ") != 0) return false;
  if (t.compare(t.size() - 4, 4, " ---") != 0) return false;
  name = trim(t.substr(4, t.size() - 8));
  return !name.empty();
}

// `Name:` lines (letters and spaces only, colon-terminated).
bool colon_header(const std::string& line, std::string& name) {
  std::string t = trim(line);
  if (t.size() < 2 || t.back() != ':') return false;
  std::string body = t.substr(0, t.size() - 1);
  if (body.empty() || !std::isalpha((unsigned char)body.front())) return false;
  for (char c : body)
    if (!std::isalpha((unsigned char)c) && c != ' ') return false;
  name = body;
  return true;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// "J." style initials: a single letter between whitespace and the terminator.
bool single_letter_abbreviation(const std::string& text, size_t dot) {
  if (dot == 0 || !std::isalpha((unsigned char)text[dot - 1])) return false;
  return dot == 1 || std::isspace((unsigned char)text[dot - 2]);
}

// Detach a trailing terminator so it tokenizes on its own.
std::string normalize_sentence(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && is_terminator(s.back()) &&
      !std::isspace((unsigned char)s[s.size() - 2])) {
    s.insert(s.size() - 1, " ");
  }
  return s;
}

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    bool at_boundary = i + 1 == text.size() || std::isspace((unsigned char)text[i + 1]);
    if (!at_boundary) continue;
    if (text[i] == '.' && single_letter_abbreviation(text, i)) continue;
    std::string sentence = normalize_sentence(text.substr(start, i - start + 1));
    if (!sentence.empty()) out.push_back(std::move(sentence));
    start = i + 1;
  }
  std::string rest = normalize_sentence(text.substr(start));
  if (!rest.empty()) out.push_back(std::move(rest));
  return out;
}

}  // namespace

NoteDocument split_note(const std::string& text) {
  NoteDocument note;
  std::string current_header = "BODY";
  std::string buffer;
  auto flush = [&]() {
    std::vector<std::string> sentences = split_sentences(buffer);
    buffer.clear();
    if (sentences.empty()) return;
    note.sections.push_back({current_header, std::move(sentences)});
  };

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string name;
    if (dashed_header(line, name) || colon_header(line, name)) {
      flush();
      current_header = name;
      continue;
    }
    if (!buffer.empty()) buffer += ' ';
    buffer += trim(line);
  }
  flush();
  return note;
}

std::vector<std::pair<std::string, std::string>> summarize(
    const NoteDocument& note, const PipelineComponents& components) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [header, sentences] : note.sections) {
    std::string line;
    for (const std::string& sentence : sentences) {
      SentenceAnalysis analysis;
      try {
        analysis = analyze_sentence(sentence, components);
      } catch (const MissingTreeError& e) {
        throw MissingTreeError(std::string(e.what()) + " (sentence: '" + sentence + "')");
      }
      std::string formatted = format_mentions(analysis.mentions);
      if (formatted.empty()) continue;
      if (!line.empty()) line += ", ";
      line += formatted;
    }
    out.push_back({header, std::move(line)});
  }
  return out;
}

}  // namespace clneg
