#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "stylochron/errors.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/metrics.hpp"
#include "stylochron/tei.hpp"
#include "stylochron/tokenize.hpp"

using namespace stylochron;

namespace {

Edition make_edition(std::vector<std::vector<int>> poem_stanza_sizes) {
  Edition ed;
  ed.label = "synthetic";
  int w = 0;
  for (const auto& sizes : poem_stanza_sizes) {
    Poem p;
    for (int n : sizes) {
      Stanza st;
      for (int i = 0; i < n; ++i) st.lines.push_back(Line{"word" + std::to_string(w++)});
      p.stanzas.push_back(std::move(st));
    }
    ed.poems.push_back(std::move(p));
  }
  return ed;
}

std::vector<Token> toks(const char* text) { return tokenize(text); }

}  // namespace

TEST_CASE("stanza_stats uses the population standard deviation") {
  // Sizes 2, 4, 6, 8: mean 5, population variance 5, std sqrt(5).
  Edition ed = make_edition({{2, 4}, {6, 8}});
  StanzaStats st = stanza_stats(ed);
  CHECK(st.count == 4);
  CHECK(st.mean_lines == Catch::Approx(5.0));
  CHECK(st.std_lines == Catch::Approx(std::sqrt(5.0)));

  // A single stanza has zero spread.
  Edition one = make_edition({{3}});
  st = stanza_stats(one);
  CHECK(st.count == 1);
  CHECK(st.mean_lines == Catch::Approx(3.0));
  CHECK(st.std_lines == 0.0);

  Edition hollow;
  hollow.label = "hollow";
  hollow.poems.push_back(Poem{});
  CHECK_THROWS_AS(stanza_stats(hollow), EmptyEditionError);
}

TEST_CASE("word_frequency counts folded surfaces over all words") {
  auto tokens = toks("I celebrate myself, and I sing.");
  FrequencyEntry e = word_frequency(tokens, {"i"});
  CHECK(e.numerator == 2);
  CHECK(e.denominator == 6);
  CHECK(e.scale == Scale::Percent);
  CHECK(e.value == Catch::Approx(100.0 * 2.0 / 6.0));

  FrequencyEntry g = word_frequency(tokens, {"myself", "sing"});
  CHECK(g.numerator == 2);
  CHECK(g.value == Catch::Approx(100.0 * 2.0 / 6.0));

  std::vector<Token> empty = toks("... !!");
  CHECK_THROWS_AS(word_frequency(empty, {"i"}), ZeroDenominatorError);
}

TEST_CASE("parenthesis_frequency counts matched pairs per thousand words") {
  auto tokens = toks("(a) b (c d)");
  FrequencyEntry e = parenthesis_frequency(tokens);
  CHECK(e.numerator == 2);
  CHECK(e.denominator == 4);
  CHECK(e.scale == Scale::Permille);
  CHECK(e.value == Catch::Approx(500.0));
}

TEST_CASE("unbalanced parentheses degrade to opens with a warning") {
  auto tokens = toks("(a (b) c");
  std::vector<std::string> warnings;
  FrequencyEntry e = parenthesis_frequency(tokens, &warnings);
  CHECK(e.numerator == 2);  // two opening marks
  CHECK(e.denominator == 3);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("unmatched") != std::string::npos);

  // A stray close also trips the warning path.
  tokens = toks("a) b");
  warnings.clear();
  e = parenthesis_frequency(tokens, &warnings);
  CHECK(e.numerator == 0);
  CHECK(warnings.size() == 1);

  CHECK_THROWS_AS(parenthesis_frequency(toks("( )")), ZeroDenominatorError);
}

TEST_CASE("parenthesis fixture yields two pairs over four words") {
  std::filesystem::path p = std::filesystem::path(STYLOCHRON_SOURCE_DIR) /
                            "tests" / "fixtures" / "paren.xml";
  Edition ed = parse_edition(read_file(p), "paren", 0);
  std::vector<Token> tokens;
  for (const auto& poem : ed.poems)
    for (const auto& st : poem.stanzas)
      for (const auto& ln : st.lines) {
        auto t = tokenize(ln.raw_text);
        tokens.insert(tokens.end(), t.begin(), t.end());
      }
  FrequencyEntry e = parenthesis_frequency(tokens);
  CHECK(e.numerator == 2);
  CHECK(e.denominator == 4);
  CHECK(e.value == Catch::Approx(500.0));
  CHECK(count_words(tokens) == 4);
}
