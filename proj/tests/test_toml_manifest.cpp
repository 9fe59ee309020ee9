#include <catch2/catch_amalgamated.hpp>

#include "stylochron/errors.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/toml.hpp"

using namespace stylochron;

TEST_CASE("toml parses scalars, tables and arrays") {
  auto doc = toml::parse(
      "top = \"level\"\n"
      "n = 42\n"
      "x = -1.5\n"
      "flag = true\n"
      "words = [\"a\", \"b, c\"]  # comment\n"
      "\n"
      "[metrics]\n"
      "alpha = 15.0\n");
  REQUIRE(doc.find(doc.root, "top") != nullptr);
  CHECK(doc.find(doc.root, "top")->str == "level");
  CHECK(doc.find(doc.root, "n")->integer == 42);
  CHECK(doc.find(doc.root, "x")->real == Catch::Approx(-1.5));
  CHECK(doc.find(doc.root, "flag")->boolean == true);
  const auto* arr = doc.find(doc.root, "words");
  REQUIRE(arr != nullptr);
  REQUIRE(arr->array.size() == 2);
  CHECK(arr->array[1].str == "b, c");
  REQUIRE(doc.tables.count("metrics") == 1);
  CHECK(doc.find(doc.tables["metrics"], "alpha")->as_real() == Catch::Approx(15.0));
}

TEST_CASE("toml array-of-tables accumulates in order") {
  auto doc = toml::parse(
      "[[edition]]\n"
      "label = \"a\"\n"
      "[[edition]]\n"
      "label = \"b\"\n");
  REQUIRE(doc.table_arrays["edition"].size() == 2);
  CHECK(doc.find(doc.table_arrays["edition"][0], "label")->str == "a");
  CHECK(doc.find(doc.table_arrays["edition"][1], "label")->str == "b");
}

TEST_CASE("toml errors carry line numbers") {
  try {
    toml::parse("good = 1\nbad line\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(toml::parse("x = @nope"), ParseError);
  CHECK_THROWS_AS(toml::parse("x = \"open"), ParseError);
  CHECK_THROWS_AS(toml::parse("[broken\nx = 1"), ParseError);
}

static const char* kManifestText =
    "[[edition]]\n"
    "label = \"1855\"\n"
    "ordinal = 0\n"
    "source = \"https://example.org/1855.xml\"\n"
    "sha256 = \"ab\"\n"
    "\n"
    "[[edition]]\n"
    "label = \"1860-61\"\n"
    "ordinal = 2\n"
    "source = \"local/1860.xml\"\n"
    "\n"
    "[metrics]\n"
    "identity_words = [\"i\"]\n"
    "identity_group = [\"me\", \"my\"]\n"
    "\n"
    "[data]\n"
    "lexicon_dir = \"lex\"\n";

TEST_CASE("manifest parses editions, metrics and data paths") {
  auto m = parse_manifest(kManifestText);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].label == "1855");
  CHECK(m.entries[0].ordinal == 0);
  REQUIRE(m.entries[0].sha256.has_value());
  CHECK(*m.entries[0].sha256 == "ab");
  CHECK_FALSE(m.entries[1].sha256.has_value());
  CHECK(m.metrics.identity_group == std::vector<std::string>{"me", "my"});
  CHECK(m.data.lexicon_dir == std::filesystem::path("lex"));
  CHECK(m.data.sentiment_dir == std::filesystem::path("sentiment"));
}

TEST_CASE("manifest validation rejects structural problems") {
  CHECK_THROWS_AS(parse_manifest(""), ManifestError);
  CHECK_THROWS_AS(
      parse_manifest("[[edition]]\nlabel = \"\"\nordinal = 0\nsource = \"x\"\n"),
      ManifestError);
  CHECK_THROWS_AS(
      parse_manifest("[[edition]]\nlabel = \"a\"\nordinal = 0\nsource = \"x\"\n"
                     "[[edition]]\nlabel = \"a\"\nordinal = 1\nsource = \"y\"\n"),
      ManifestError);
  CHECK_THROWS_AS(
      parse_manifest("[[edition]]\nlabel = \"a\"\nordinal = 1\nsource = \"x\"\n"
                     "[[edition]]\nlabel = \"b\"\nordinal = 1\nsource = \"y\"\n"),
      ManifestError);
  CHECK_THROWS_AS(
      parse_manifest("[[edition]]\nlabel = \"a\"\nordinal = 0\nsource = \"\"\n"),
      ManifestError);
}

TEST_CASE("load_manifest resolves data paths against the manifest directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "stylochron_manifest_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "m.toml");
    out << kManifestText;
  }
  auto m = load_manifest(dir / "m.toml");
  CHECK(m.data.lexicon_dir == dir / "lex");
  CHECK(m.data.reviews_file == dir / "reviews.csv");
  CHECK_THROWS_AS(load_manifest(dir / "absent.toml"), ManifestError);
  fs::remove_all(dir);
}
