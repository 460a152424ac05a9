// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure. Expected values are frozen from the design worksheets; the random
// checks use fixed seeds and independent brute-force oracles.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "clneg/eval.hpp"
#include "clneg/note.hpp"
#include "support.hpp"

using namespace clneg;
using testsupport::data_dir;

namespace {

struct Harness {
  int failures = 0;

  void run(int number, const std::string& title, const std::function<void()>& body) {
    auto begin = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (error.empty()) {
      std::cout << "PASS  criterion " << number << ": " << title << "  (" << secs << " s)\n";
    } else {
      ++failures;
      std::cout << "FAIL  criterion " << number << ": " << title << " -- " << error << "\n";
    }
  }
};

void require(bool cond, const std::string& message) {
  if (!cond) throw std::runtime_error(message);
}

struct Bundle {
  Lexicon lexicon = load_lexicon(data_dir() + "/lexicon.tsv");
  std::vector<Rule> rules = load_rules(data_dir() + "/rules.txt");
  std::set<std::string> stopwords = load_stopwords(data_dir() + "/stopwords.txt");
  std::vector<ConceptEntry> dict = load_dictionary(data_dir() + "/dictionary.tsv");
  SemanticGroups groups = load_semantic_groups(data_dir() + "/semantic_groups.tsv");

  PipelineComponents with(const TreeProvider& provider) {
    return PipelineComponents{&provider, &lexicon, &rules, &stopwords, &dict, &groups, true};
  }
};

std::vector<std::string> file_lines(const std::string& path) {
  std::ifstream f(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

int main() {
  Harness h;
  Bundle b;

  h.run(1, "section 4.2.6 end-to-end on the bundled tree", [&] {
    const std::string sentence =
        "Left lower ext edema : U/S was performed , no evidence of dvt .";
    Treebank sec = load_treebank(data_dir() + "/fixtures/sec426.tb");
    const Tree* full = sec.find(sentence);
    require(full != nullptr, "full-sentence tree missing");
    auto m = match_first(parse_pattern("NP <<, no"), *full);
    require(m.has_value(), "pattern NP <<, no found no match");
    require(yield_tokens(*find_node(*full, m->root_id)) ==
                std::vector<std::string>{"no", "evidence", "of", "dvt"},
            "pattern matched the wrong NP");

    TreebankProvider provider(std::move(sec));
    auto analysis = analyze_sentence(sentence, b.with(provider));
    require(analysis.negations.size() == 1 && analysis.negations[0].matched(),
            "detection failed");
    require(analysis.negations[0].negated_tokens == std::vector<std::string>{"dvt"},
            "cleanup did not isolate dvt");
    require(analysis.mentions.size() == 1 && analysis.mentions[0].cui == "C0149871" &&
                analysis.mentions[0].polarity == Polarity::Negated,
            "dvt not mapped to its dictionary entry with polarity (-)");
  });

  h.run(2, "appendix replay: 8 dev spans and the itemized final line", [&] {
    const std::vector<std::pair<int, int>> expected{{29, 40}, {1, 9},   {21, 49}, {1, 18},
                                                    {13, 50}, {24, 33}, {25, 37}, {1, 16}};
    TreebankProvider provider(load_treebank(data_dir() + "/fixtures/dev_trees.tb"));
    auto sentences = file_lines(data_dir() + "/fixtures/dev_sentences.txt");
    require(sentences.size() == 8, "expected 8 dev sentences");
    for (size_t i = 0; i < sentences.size(); ++i) {
      auto results = detect(sentences[i], provider, b.lexicon, b.rules, b.stopwords);
      require(results.size() == 1 && results[0].matched(),
              "no negation detected for: " + sentences[i]);
      require(results[0].span == expected[i],
              "span mismatch on sentence " + std::to_string(i) + ": got (" +
                  std::to_string(results[0].span.first) + ", " +
                  std::to_string(results[0].span.second) + ")");
    }
    std::ifstream note_file(data_dir() + "/fixtures/note.txt");
    std::stringstream ss;
    ss << note_file.rdbuf();
    auto sections = summarize(split_note(ss.str()), b.with(provider));
    require(sections.size() == 1, "expected one note section");
    require(sections[0].second ==
                "Infiltration(-), Communicable Diseases(-), Physical findings(-), "
                "Communicable Diseases(-), Communicable Diseases(-), Heart failure(-), "
                "Malignant Neoplasms(-), Neoplasms(-), Malignant Neoplasms(-)",
            "final itemized line mismatch: " + sections[0].second);
  });

  h.run(3, "tree-query equivalence with the brute-force oracle", [&] {
    std::mt19937 rng(11);
    std::vector<Pattern> patterns;
    for (int i = 0; i < 200; ++i) patterns.push_back(testsupport::random_pattern(rng));
    for (int i = 0; i < 500; ++i) {
      Tree t = testsupport::random_tree(rng, 25);
      const Pattern& p = patterns[i % patterns.size()];
      std::vector<int> fast;
      for (const MatchBinding& m : match_all(p, t)) fast.push_back(m.root_id);
      require(fast == testsupport::naive_match_roots(p, t),
              "oracle disagreement on instance " + std::to_string(i));
    }
  });

  h.run(4, "surgery well-formedness on random operations", [&] {
    std::function<bool(const Tree&)> well_formed = [&](const Tree& t) {
      if (t.children.empty()) return t.token.has_value();
      if (t.token.has_value()) return false;
      for (const Tree& c : t.children)
        if (!well_formed(c)) return false;
      return true;
    };
    auto subsequence = [](const std::vector<std::string>& sub,
                          const std::vector<std::string>& full) {
      size_t i = 0;
      for (const std::string& w : full)
        if (i < sub.size() && sub[i] == w) ++i;
      return i == sub.size();
    };
    std::mt19937 rng(23);
    int done = 0;
    while (done < 500) {
      Tree t = testsupport::random_tree(rng, 25);
      int n = node_count(t);
      if (n < 3) continue;
      auto before = yield_tokens(t);
      Tree after;
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        int id = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const Tree* victim = find_node(t, id);
        if (yield_tokens(*victim).size() == before.size()) continue;
        after = delete_node(t, id);
      } else {
        int top = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const Tree* top_node = find_node(t, top);
        if (top_node->is_leaf()) continue;
        const Tree* bottom = top_node;
        while (!bottom->children.empty() && std::uniform_int_distribution<int>(0, 1)(rng))
          bottom = &bottom->children[std::uniform_int_distribution<size_t>(
              0, bottom->children.size() - 1)(rng)];
        if (bottom->is_leaf()) continue;
        after = excise(t, top, bottom->node_id);
      }
      require(well_formed(after), "result not well-formed");
      require(subsequence(yield_tokens(after), before), "yield not a subsequence");
      ++done;
    }
  });

  h.run(5, "SBAR content excluded from the negated span", [&] {
    TreebankProvider provider(load_treebank(data_dir() + "/fixtures/eval_trees.tb"));
    auto results = detect("there is no congestive heart failure that requires treatment .",
                          provider, b.lexicon, b.rules, b.stopwords);
    require(results.size() == 1 && results[0].matched(), "detection failed");
    require(results[0].negated_tokens ==
                std::vector<std::string>{"congestive", "heart", "failure"},
            "negated tokens must be exactly the concept phrase");
    for (const std::string& w : {std::string("that"), std::string("requires"),
                                 std::string("treatment")})
      for (const std::string& got : results[0].negated_tokens)
        require(got != w, "SBAR token leaked into the negated span: " + w);
  });

  h.run(6, "pseudonegation suite yields no negations and all (+)", [&] {
    TreebankProvider provider(load_treebank(data_dir() + "/fixtures/dev_trees.tb"));
    int mentions_seen = 0;
    for (const std::string& sentence :
         file_lines(data_dir() + "/fixtures/pseudo_sentences.txt")) {
      auto analysis = analyze_sentence(sentence, b.with(provider));
      require(analysis.negations.empty(), "unexpected negation in: " + sentence);
      for (const ConceptMention& m : analysis.mentions) {
        require(m.polarity == Polarity::Positive, "non-positive polarity in: " + sentence);
        ++mentions_seen;
      }
    }
    require(mentions_seen >= 4, "suite must exercise concept mentions");
  });

  h.run(7, "longest-span resolution with oracle agreement", [&] {
    std::string sentence = "recent diagnosis of ulcerative colitis";
    auto mentions = identify(sentence, whitespace_tokens(sentence), b.dict);
    require(mentions.size() == 1 && mentions[0].preferred == "Ulcerative Colitis",
            "ulcerative colitis must resolve to exactly one mention");

    std::mt19937 rng(31);
    const std::vector<std::string> vocab{"a", "b", "c", "d", "e"};
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<ConceptEntry> dict;
      int entries = std::uniform_int_distribution<int>(1, 6)(rng);
      for (int d = 0; d < entries; ++d) {
        ConceptEntry e;
        int len = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int k = 0; k < len; ++k)
          e.surface.push_back(vocab[std::uniform_int_distribution<size_t>(0, 4)(rng)]);
        e.cui = "C" + std::to_string(d);
        e.preferred = e.cui;
        e.tui = "T047";
        dict.push_back(std::move(e));
      }
      int n = std::uniform_int_distribution<int>(1, 12)(rng);
      std::vector<std::string> tokens;
      std::string text;
      for (int k = 0; k < n; ++k) {
        tokens.push_back(vocab[std::uniform_int_distribution<size_t>(0, 4)(rng)]);
        if (k) text += ' ';
        text += tokens.back();
      }
      auto fast = identify(text, tokens, dict);
      auto slow = testsupport::oracle_spans(tokens, dict);
      require(fast.size() == slow.size(), "span count mismatch");
      for (size_t k = 0; k < fast.size(); ++k)
        require(fast[k].token_start == slow[k].start && fast[k].token_end == slow[k].end &&
                    fast[k].cui == dict[slow[k].dict_index].cui,
                "span detail mismatch");
    }
  });

  h.run(8, "syntax accuracy strictly exceeds the negex baseline", [&] {
    TreebankProvider provider(load_treebank(data_dir() + "/fixtures/eval_trees.tb"));
    auto records = load_eval(data_dir() + "/fixtures/eval.txt");
    int negated = 0, long_coordinations = 0;
    for (const EvalRecord& r : records) {
      int here = 0;
      for (const GoldConcept& g : r.gold)
        if (g.polarity == Polarity::Negated) ++here;
      negated += here;
      if (here >= 4) ++long_coordinations;
    }
    require(negated >= 40, "need at least 40 gold negated concepts");
    require(long_coordinations >= 3, "need at least 3 long-coordination sentences");

    PipelineComponents c = b.with(provider);
    Metrics syntax = evaluate_negation(records, NegMode::Syntax, c, WindowConfig{});
    Metrics negex = evaluate_negation(records, NegMode::Negex, c, WindowConfig{});
    require(syntax.accuracy > negex.accuracy, "syntax must strictly beat negex");

    // A concept more than `window` tokens after its trigger stays missed even
    // without comma terminators.
    WindowConfig no_comma;
    no_comma.terminators.erase(",");
    std::string sentence =
        "She otherwise denies any vomiting , rash , rhinorrhea , dysuria , cough , SOB or "
        "abdominal discomfort .";
    auto tokens = whitespace_tokens(sentence);
    auto scopes = negex_detect(tokens, b.lexicon, no_comma);
    require(scopes.size() == 1, "expected a single trigger");
    auto target = phrase_char_span(sentence, "abdominal discomfort");
    auto spans = tokenize_with_spans(sentence);
    require(scopes[0].scope_start <= scopes[0].scope_end, "empty scope");
    std::pair<int, int> scope_chars{spans[scopes[0].scope_start].start,
                                    spans[scopes[0].scope_end].end};
    require(!(target.first >= scope_chars.first && target.second <= scope_chars.second),
            "concept beyond the window must be missed by negex");
  });

  h.run(9, "semantic filtering raises precision at equal recall", [&] {
    auto records = load_eval(data_dir() + "/fixtures/eval.txt");
    TreebankProvider provider(load_treebank(data_dir() + "/fixtures/eval_trees.tb"));
    PipelineComponents c = b.with(provider);
    Metrics with = evaluate_concepts(records, true, c);
    Metrics without = evaluate_concepts(records, false, c);
    require(with.precision > without.precision, "filtering must raise precision");
    require(with.recall == without.recall, "filtering must not change recall");
  });

  h.run(10, "lexicon integrity: 196 terms, 83/17/73/8/15", [&] {
    auto counts = b.lexicon.category_counts();
    int total = 0;
    for (const auto& [loc, n] : counts) total += n;
    require(total == 196, "expected 196 terms, got " + std::to_string(total));
    require(counts[NegLocation::PREN] == 83, "PREN count");
    require(counts[NegLocation::POSN] == 17, "POSN count");
    require(counts[NegLocation::PREP] == 73, "PREP count");
    require(counts[NegLocation::POSP] == 8, "POSP count");
    require(counts[NegLocation::PSEU] == 15, "PSEU count");

    // A broken row must fail loading and name its line.
    std::ofstream("lexicon_broken_tmp.tsv") << "no\tPREN\tNP\tDT\nbroken line\n";
    try {
      load_lexicon("lexicon_broken_tmp.tsv");
      throw std::runtime_error("broken lexicon row did not fail loading");
    } catch (const Error& e) {
      require(std::string(e.what()).find(":2:") != std::string::npos,
              "load error must name the line number");
    }
  });

  if (h.failures == 0) {
    std::cout << "ALL ACCEPTANCE CRITERIA PASSED\n";
    return 0;
  }
  std::cout << h.failures << " criteria FAILED\n";
  return 1;
}
