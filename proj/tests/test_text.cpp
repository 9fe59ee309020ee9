#include <catch2/catch_amalgamated.hpp>

#include "stylochron/text.hpp"

using namespace stylochron;

TEST_CASE("fold lowercases ascii and maps the right single quote") {
  CHECK(fold("Weather'd") == "weather'd");
  CHECK(fold("O CAPTAIN!") == "o captain!");
  CHECK(fold("don’t") == "don't");
  CHECK(fold("Roêse") == "roêse");  // non-ascii bytes pass through
}

TEST_CASE("normalize_whitespace collapses runs and trims") {
  CHECK(normalize_whitespace("  a\t b\n\nc  ") == "a b c");
  CHECK(normalize_whitespace("") == "");
  CHECK(normalize_whitespace(" \t\n ") == "");
  CHECK(normalize_whitespace("one") == "one");
}

TEST_CASE("split keeps empty fields") {
  auto p = split("a,b,,c", ',');
  REQUIRE(p.size() == 4);
  CHECK(p[0] == "a");
  CHECK(p[2] == "");
  CHECK(split("", ',').size() == 1);
  CHECK(split("x,", ',').size() == 2);
}

TEST_CASE("trim strips both ends") {
  CHECK(trim("  x y  ") == "x y");
  CHECK(trim("\t\n") == "");
}

TEST_CASE("format_real renders six significant digits, stable") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(3.6) == "3.6");
  CHECK(format_real(0.123456789) == "0.123457");
  CHECK(format_real(37175.0) == "37175");
  CHECK(format_real(-2.5) == "-2.5");
}

TEST_CASE("decode_utf8 handles 1..4 byte sequences and noise") {
  std::string em = "—";  // em dash, 3 bytes
  auto cp = decode_utf8(em, 0);
  CHECK(cp.value == 0x2014);
  CHECK(cp.length == 3);

  std::string two = "é";  // e acute, 2 bytes
  cp = decode_utf8(two, 0);
  CHECK(cp.value == 0xE9);
  CHECK(cp.length == 2);

  std::string four = "\U0001F600";  // 4 bytes
  cp = decode_utf8(four, 0);
  CHECK(cp.value == 0x1F600);
  CHECK(cp.length == 4);

  std::string bad = "\x80x";  // stray continuation byte decodes as itself
  cp = decode_utf8(bad, 0);
  CHECK(cp.value == 0x80);
  CHECK(cp.length == 1);

  std::string truncated = "\xE2\x80";  // cut-off 3-byte sequence
  cp = decode_utf8(truncated, 0);
  CHECK(cp.value == 0xE2);
  CHECK(cp.length == 1);
}

TEST_CASE("is_all_caps requires letters and no lowercase") {
  CHECK(is_all_caps("GRAND"));
  CHECK(is_all_caps("O"));
  CHECK_FALSE(is_all_caps("Grand"));
  CHECK_FALSE(is_all_caps("123"));
  CHECK_FALSE(is_all_caps("!!"));
  CHECK(is_all_caps("DON'T"));
}
