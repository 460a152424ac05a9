#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support.hpp"

using namespace clneg;

namespace {

Lexicon bundled() { return load_lexicon(testsupport::data_dir() + "/lexicon.tsv"); }

std::string write_temp(const std::string& content) {
  std::string path = "lexicon_test_tmp.tsv";
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("bundled lexicon loads with the documented counts") {
  Lexicon lex = bundled();
  auto counts = lex.category_counts();
  CHECK(counts[NegLocation::PREN] == 83);
  CHECK(counts[NegLocation::POSN] == 17);
  CHECK(counts[NegLocation::PREP] == 73);
  CHECK(counts[NegLocation::POSP] == 8);
  CHECK(counts[NegLocation::PSEU] == 15);
  int total = 0;
  for (const auto& [loc, n] : counts) total += n;
  CHECK(total == 196);
}

TEST_CASE("malformed rows fail with a line number") {
  std::string p1 = write_temp("no\tPREN\tNP\tDT\nbad row without tabs\n");
  CHECK_THROWS_WITH_AS(load_lexicon(p1), doctest::Contains(":2:"), Error);
  std::string p2 = write_temp("no\tNOWHERE\tNP\tDT\n");
  CHECK_THROWS_WITH_AS(load_lexicon(p2), doctest::Contains("NOWHERE"), Error);
  std::string p3 = write_temp("no\tPREN\tXP\tDT\n");
  CHECK_THROWS_WITH_AS(load_lexicon(p3), doctest::Contains("XP"), Error);
  std::string p4 = write_temp("no\tPREN\tNP\tDT\nno\tPREN\tNP\tDT\n");
  CHECK_THROWS_WITH_AS(load_lexicon(p4), doctest::Contains("duplicate"), Error);
  std::string p5 = write_temp("no increase\tPSEU\tNP\tDT\n");
  CHECK_THROWS_AS(load_lexicon(p5), Error);  // pseudonegation must be NONE
  std::remove(p1.c_str());
}

TEST_CASE("location and phrase type helpers") {
  CHECK(parse_location("PREN") == NegLocation::PREN);
  CHECK(to_string(NegLocation::POSP) == "POSP");
  CHECK(parse_phrase_type("VP-A") == PhraseType::VP_A);
  CHECK(to_string(PhraseType::ADJP_P) == "ADJP-P");
  CHECK(is_pre(NegLocation::PREP));
  CHECK(is_post(NegLocation::POSN));
  CHECK(is_possible(NegLocation::POSP));
  CHECK(!is_possible(NegLocation::PREN));
}

TEST_CASE("longest leftmost matching, case-insensitive") {
  Lexicon lex = bundled();
  auto tokens = whitespace_tokens("There is No Evidence Of dvt .");
  auto hits = find_triggers(tokens, lex);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].term.text() == "no evidence of");
  CHECK(hits[0].token_start == 2);
  CHECK(hits[0].token_end == 4);
  CHECK(hits[0].term.location == NegLocation::PREN);
  CHECK(hits[0].term.phrase_type == PhraseType::PP);
}

TEST_CASE("pseudonegation wins over its shorter prefix") {
  Lexicon lex = bundled();
  auto hits = find_triggers(whitespace_tokens("there was no increase in pain ."), lex);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].term.location == NegLocation::PSEU);
  CHECK(hits[0].term.text() == "no increase");
}

TEST_CASE("non-overlapping matches scan left to right") {
  Lexicon lex = bundled();
  auto hits = find_triggers(
      whitespace_tokens("no evidence of infection and tumor was ruled out ."), lex);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].term.text() == "no evidence of");
  CHECK(hits[1].term.text() == "was ruled out");
}

TEST_CASE("single-token membership") {
  Lexicon lex = bundled();
  CHECK(lex.is_single_token_term("no"));
  CHECK(lex.is_single_token_term("not"));
  CHECK(!lex.is_single_token_term("evidence"));
}
