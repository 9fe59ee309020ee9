#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "stylochron/tokenize.hpp"

using namespace stylochron;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.surface);
  return out;
}

std::string joined(const std::vector<Token>& toks) {
  std::string out;
  for (const auto& t : toks) out += t.surface;
  return out;
}

std::size_t word_count(const std::vector<Token>& toks) {
  std::size_t n = 0;
  for (const auto& t : toks) n += t.is_word() ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("tokenize splits words and punctuation") {
  auto toks = tokenize("I celebrate myself, and sing myself.");
  CHECK(surfaces(toks) == std::vector<std::string>{"I", "celebrate", "myself", ",",
                                                   "and", "sing", "myself", "."});
  CHECK(word_count(toks) == 6);
  CHECK(toks[3].kind == Token::Kind::Punct);
}

TEST_CASE("flanked apostrophes stay inside words") {
  auto toks = tokenize("weather'd o'er don’t 'tis boys'");
  auto s = surfaces(toks);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == "weather'd");
  CHECK(s[1] == "o'er");
  CHECK(s[2] == "don’t");
  CHECK(s[3] == "'");   // leading apostrophe is not flanked
  CHECK(s[4] == "tis");
  CHECK(s[5] == "boys");
  CHECK(s[6] == "'");   // trailing apostrophe is not flanked
  CHECK(toks[2].folded == "don't");  // folding maps U+2019 to '
}

TEST_CASE("single intra-word hyphen is kept, runs split") {
  auto toks = tokenize("to-day a--b self-possess'd 4-fold");
  auto s = surfaces(toks);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == "to-day");
  CHECK(s[1] == "a");
  CHECK(s[2] == "--");
  CHECK(s[3] == "b");
  CHECK(s[4] == "self-possess'd");
  CHECK(s[5] == "4-fold");
  CHECK(toks[2].kind == Token::Kind::Punct);
}

TEST_CASE("unicode dashes are punctuation that split neighbors") {
  auto toks = tokenize("night—mother");
  auto s = surfaces(toks);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == "night");
  CHECK(s[1] == "—");
  CHECK(toks[1].kind == Token::Kind::Punct);
  CHECK(s[2] == "mother");

  toks = tokenize("a–b ―c");
  s = surfaces(toks);
  REQUIRE(s.size() == 5);
  CHECK(s[1] == "–");
  CHECK(s[3] == "―");
}

TEST_CASE("every other punctuation mark is its own token") {
  auto toks = tokenize("Stop!! (now); \"quote.\"");
  auto s = surfaces(toks);
  CHECK(s == std::vector<std::string>{"Stop", "!", "!", "(", "now", ")", ";",
                                      "\"", "quote", ".", "\""});
}

TEST_CASE("accented latin letters are word characters") {
  auto toks = tokenize("café naïve");
  auto s = surfaces(toks);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "café");
  CHECK(s[1] == "naïve");
}

TEST_CASE("tokens concatenate back to the line minus whitespace") {
  const char* lines[] = {
      "I celebrate myself, and sing myself.",
      "weather'd o'er don’t 'tis boys'",
      "to-day a--b self-possess'd",
      "night—mother (now); \"quote.\"",
      "  leading and trailing  ",
      "",
  };
  for (const char* line : lines) {
    std::string squashed;
    for (std::size_t i = 0; i < std::string(line).size();) {
      Codepoint cp = decode_utf8(line, i);
      if (!tok_detail::is_space_cp(cp.value))
        squashed += std::string(line).substr(i, cp.length);
      i += cp.length;
    }
    CHECK(joined(tokenize(line)) == squashed);
  }
}

TEST_CASE("numbers tokenize as words") {
  auto toks = tokenize("In 1855 there were 12 poems.");
  CHECK(word_count(toks) == 6);
  CHECK(toks[1].surface == "1855");
  CHECK(toks[1].is_word());
}
