#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clneg/eval.hpp"
#include "clneg/note.hpp"

#ifndef CLNEG_DATA_DIR
#define CLNEG_DATA_DIR "data"
#endif

namespace {

using namespace clneg;

std::string data_path(const char* name) {
  return std::string(CLNEG_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Options shared by the pipeline-driven subcommands; loaded lazily so each
// subcommand only pays for the resources it declares.
struct Resources {
  std::string trees_path;
  std::string tree_cmd;
  std::string lexicon_path = data_path("lexicon.tsv");
  std::string rules_path = data_path("rules.txt");
  std::string stopwords_path = data_path("stopwords.txt");
  std::string dict_path = data_path("dictionary.tsv");
  std::string groups_path = data_path("semantic_groups.tsv");

  std::unique_ptr<TreeProvider> provider;
  Lexicon lexicon;
  std::vector<Rule> rules;
  std::set<std::string> stopwords;
  std::vector<ConceptEntry> dict;
  SemanticGroups groups;

  void add_tree_options(CLI::App* cmd) {
    cmd->add_option("--trees", trees_path, "treebank sidecar file");
    cmd->add_option("--tree-cmd", tree_cmd,
                    "external parser command (reads sentences, prints PTB trees)");
  }
  void add_neg_options(CLI::App* cmd) {
    add_tree_options(cmd);
    cmd->add_option("--lexicon", lexicon_path, "trigger lexicon TSV");
    cmd->add_option("--rules", rules_path, "pattern/surgery rules file");
    cmd->add_option("--stopwords", stopwords_path, "stopword list");
  }
  void add_concept_options(CLI::App* cmd) {
    cmd->add_option("--dict", dict_path, "concept dictionary TSV");
    cmd->add_option("--groups", groups_path, "semantic groups file");
  }

  PipelineComponents load(bool need_trees, bool need_dict) {
    PipelineComponents c;
    if (need_trees) {
      if (!tree_cmd.empty()) {
        provider = std::make_unique<CommandProvider>(tree_cmd);
      } else if (!trees_path.empty()) {
        provider = std::make_unique<TreebankProvider>(load_treebank(trees_path));
      } else {
        throw Error("one of --trees or --tree-cmd is required");
      }
      c.provider = provider.get();
      lexicon = load_lexicon(lexicon_path);
      rules = load_rules(rules_path);
      stopwords = load_stopwords(stopwords_path);
      c.lexicon = &lexicon;
      c.rules = &rules;
      c.stopwords = &stopwords;
    }
    if (need_dict) {
      dict = load_dictionary(dict_path);
      groups = load_semantic_groups(groups_path);
      c.dict = &dict;
      c.groups = &groups;
    }
    return c;
  }
};

void print_mentions_tsv(std::ostream& out, const std::string& section,
                        const std::vector<ConceptMention>& mentions) {
  for (const ConceptMention& m : mentions) {
    out << section << '\t' << m.cui << '\t' << m.preferred << '\t'
        << (m.polarity == Polarity::Negated ? "-" : "+") << '\t'
        << (m.possible ? "yes" : "no") << '\t' << m.char_span.first << ','
        << m.char_span.second << '\n';
  }
}

int cmd_summarize(Resources& res, const std::string& note_path, const std::string& format) {
  PipelineComponents c = res.load(true, true);
  NoteDocument note = split_note(read_file(note_path));
  if (format == "tsv") {
    for (const auto& [header, sentences] : note.sections) {
      for (const std::string& sentence : sentences) {
        SentenceAnalysis a = analyze_sentence(sentence, c);
        print_mentions_tsv(std::cout, header, a.mentions);
      }
    }
    return 0;
  }
  for (const auto& [header, line] : summarize(note, c)) {
    std::cout << "--- " << header << " ---\n" << line << "\n";
  }
  return 0;
}

int cmd_negate(Resources& res, const std::string& sentences_path, bool trace) {
  PipelineComponents c = res.load(true, true);
  std::vector<std::string> sentences = read_lines(sentences_path);
  std::vector<SentenceAnalysis> analyses = analyze_batch(sentences, c, true);
  std::vector<std::string> items;
  for (size_t i = 0; i < analyses.size(); ++i) {
    const SentenceAnalysis& a = analyses[i];
    if (trace) {
      print_trace(std::cout, (int)i, a);
    } else {
      for (const NegationResult& n : a.negations) {
        std::cout << i << '\t' << n.trigger.term.text() << '\t'
                  << (n.matched() ? "negated" : "unmatched") << '\t' << n.span.first << ','
                  << n.span.second << '\n';
      }
    }
    std::string formatted = format_mentions(a.mentions);
    if (!formatted.empty()) items.push_back(formatted);
  }
  if (trace) {
    std::cout << "--- Final output ---\n\n";
    std::string line;
    for (const std::string& item : items) {
      if (!line.empty()) line += ", ";
      line += item;
    }
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_tregex(const std::string& pattern_text, const std::string& trees_path) {
  Pattern pattern = parse_pattern(pattern_text);
  Treebank bank = load_treebank(trees_path);
  for (size_t i = 0; i < bank.entries.size(); ++i) {
    const TreebankEntry& entry = bank.entries[i];
    for (const MatchBinding& b : match_all(pattern, entry.tree)) {
      const Tree* node = find_node(entry.tree, b.root_id);
      std::cout << i << '\t' << b.root_id << '\t' << to_ptb(*node);
      for (const auto& [name, id] : b.captures) std::cout << '\t' << name << "=" << id;
      std::cout << '\n';
    }
  }
  return 0;
}

void print_metrics(const Metrics& m) {
  std::cout << "accuracy: " << m.accuracy << "\n"
            << "precision: " << m.precision << "\n"
            << "recall: " << m.recall << "\n"
            << "f1: " << m.f1 << "\n"
            << "counts: tp=" << m.tp << " fp=" << m.fp << " fn=" << m.fn
            << " total=" << m.total << "\n";
}

int cmd_eval_neg(Resources& res, const std::string& eval_path, const std::string& mode,
                 int window, bool no_comma) {
  bool syntax = mode == "syntax";
  PipelineComponents c = res.load(syntax, false);
  if (!syntax) {
    res.lexicon = load_lexicon(res.lexicon_path);
    c.lexicon = &res.lexicon;
  }
  WindowConfig cfg;
  cfg.window = window;
  if (no_comma) cfg.terminators.erase(",");
  Metrics m = evaluate_negation(load_eval(eval_path), syntax ? NegMode::Syntax : NegMode::Negex,
                                c, cfg);
  print_metrics(m);
  return 0;
}

int cmd_eval_con(Resources& res, const std::string& eval_path, const std::string& filter) {
  PipelineComponents c = res.load(false, true);
  Metrics m = evaluate_concepts(load_eval(eval_path), filter == "on", c);
  print_metrics(m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clinical negation and concept summarization toolkit"};
  app.require_subcommand(1);

  Resources res;

  std::string note_path, format = "text";
  CLI::App* summarize_cmd = app.add_subcommand("summarize", "itemize note concepts");
  summarize_cmd->add_option("note", note_path, "clinical note file")->required();
  res.add_neg_options(summarize_cmd);
  res.add_concept_options(summarize_cmd);
  summarize_cmd->add_option("--format", format, "text|tsv")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::string sentences_path;
  bool trace = false;
  CLI::App* negate_cmd = app.add_subcommand("negate", "detect negations per sentence");
  negate_cmd->add_option("sentences", sentences_path, "one sentence per line")->required();
  res.add_neg_options(negate_cmd);
  res.add_concept_options(negate_cmd);
  negate_cmd->add_flag("--trace", trace, "print diagnostic records");

  std::string pattern_text, tregex_trees;
  CLI::App* tregex_cmd = app.add_subcommand("tregex", "match a tree pattern");
  tregex_cmd->add_option("pattern", pattern_text, "tree pattern")->required();
  tregex_cmd->add_option("--trees", tregex_trees, "treebank sidecar file")->required();

  std::string eval_path, mode = "syntax";
  int window = 5;
  bool no_comma = false;
  CLI::App* eval_neg_cmd = app.add_subcommand("eval-neg", "score negation detection");
  eval_neg_cmd->add_option("eval", eval_path, "gold annotation file")->required();
  eval_neg_cmd->add_option("--mode", mode, "syntax|negex")
      ->check(CLI::IsMember({"syntax", "negex"}));
  eval_neg_cmd->add_option("--window", window, "baseline window size");
  eval_neg_cmd->add_flag("--no-comma-terminator", no_comma,
                         "do not treat ',' as a scope terminator");
  res.add_neg_options(eval_neg_cmd);

  std::string con_eval_path, filter = "on";
  CLI::App* eval_con_cmd = app.add_subcommand("eval-con", "score concept identification");
  eval_con_cmd->add_option("eval", con_eval_path, "gold annotation file")->required();
  eval_con_cmd->add_option("--filter", filter, "on|off")->check(CLI::IsMember({"on", "off"}));
  res.add_concept_options(eval_con_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize_cmd->parsed()) return cmd_summarize(res, note_path, format);
    if (negate_cmd->parsed()) return cmd_negate(res, sentences_path, trace);
    if (tregex_cmd->parsed()) return cmd_tregex(pattern_text, tregex_trees);
    if (eval_neg_cmd->parsed()) return cmd_eval_neg(res, eval_path, mode, window, no_comma);
    if (eval_con_cmd->parsed()) return cmd_eval_con(res, con_eval_path, filter);
  } catch (const clneg::MissingTreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
