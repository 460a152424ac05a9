// Compares the serial and OpenMP batch-analysis paths on a replicated
// sentence workload and checks that their outputs agree.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clneg/pipeline.hpp"

#ifndef CLNEG_DATA_DIR
#define CLNEG_DATA_DIR "data"
#endif

using namespace clneg;
using Clock = std::chrono::steady_clock;

namespace {

double run(const std::vector<std::string>& sentences, const PipelineComponents& c,
           bool parallel, std::vector<SentenceAnalysis>& out) {
  auto begin = Clock::now();
  out = analyze_batch(sentences, c, parallel);
  return std::chrono::duration<double>(Clock::now() - begin).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = CLNEG_DATA_DIR;
  int repeat = 2000;
  CLI::App app{"serial vs parallel batch analysis benchmark"};
  app.add_option("--data", dir, "data directory");
  app.add_option("--repeat", repeat, "workload multiplier");
  CLI11_PARSE(app, argc, argv);

  try {
    TreebankProvider provider(load_treebank(dir + "/fixtures/dev_trees.tb"));
    Lexicon lexicon = load_lexicon(dir + "/lexicon.tsv");
    std::vector<Rule> rules = load_rules(dir + "/rules.txt");
    std::set<std::string> stopwords = load_stopwords(dir + "/stopwords.txt");
    std::vector<ConceptEntry> dict = load_dictionary(dir + "/dictionary.tsv");
    SemanticGroups groups = load_semantic_groups(dir + "/semantic_groups.tsv");
    PipelineComponents c{&provider, &lexicon, &rules, &stopwords, &dict, &groups, true};

    std::vector<std::string> base;
    std::ifstream f(dir + "/fixtures/dev_sentences.txt");
    std::string line;
    while (std::getline(f, line))
      if (!line.empty()) base.push_back(line);
    std::vector<std::string> workload;
    for (int r = 0; r < repeat; ++r)
      workload.insert(workload.end(), base.begin(), base.end());

    std::vector<SentenceAnalysis> serial, parallel;
    double ts = run(workload, c, false, serial);
    double tp = run(workload, c, true, parallel);

    bool agree = serial.size() == parallel.size();
    for (size_t i = 0; agree && i < serial.size(); ++i) {
      agree = serial[i].negations.size() == parallel[i].negations.size() &&
              serial[i].mentions.size() == parallel[i].mentions.size();
      for (size_t k = 0; agree && k < serial[i].negations.size(); ++k)
        agree = serial[i].negations[k].span == parallel[i].negations[k].span;
    }

    std::cout << "sentences: " << workload.size() << "\n";
    std::cout << "serial:    " << ts << " s\n";
    std::cout << "parallel:  " << tp << " s\n";
    std::cout << "speedup:   " << (tp > 0 ? ts / tp : 0) << "x\n";
    std::cout << "outputs agree: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
