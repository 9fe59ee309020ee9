#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "stylochron/errors.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/model.hpp"
#include "stylochron/tei.hpp"

using namespace stylochron;

static std::string fixture(const char* name) {
  std::filesystem::path p =
      std::filesystem::path(STYLOCHRON_SOURCE_DIR) / "tests" / "fixtures" / name;
  return read_file(p);
}

TEST_CASE("parse_edition extracts poems, titles, stanzas, lines") {
  Edition ed = parse_edition(fixture("mini.xml"), "mini", 0);
  CHECK(ed.label == "mini");
  REQUIRE(ed.poems.size() == 1);
  const Poem& p = ed.poems[0];
  REQUIRE(p.title.has_value());
  CHECK(*p.title == "A Song of the Meadow");
  REQUIRE(p.stanzas.size() == 2);
  CHECK(p.stanzas[0].lines.size() == 3);
  CHECK(p.stanzas[1].lines.size() == 2);
  CHECK(p.stanzas[0].lines[0].raw_text == "I wander the meadow at dawn,");
  // Inline markup is stripped, whitespace normalized.
  CHECK(p.stanzas[0].lines[1].raw_text == "I follow the low green river,");
  CHECK(p.stanzas[0].lines[2].raw_text == "And the swallows turn above me.");
  CHECK(ed.stanza_count() == 2);
  CHECK(ed.line_count() == 5);
}

TEST_CASE("header, front and back matter are skipped") {
  Edition ed = parse_edition(fixture("mini.xml"), "mini", 0);
  for (const auto& poem : ed.poems)
    for (const auto& st : poem.stanzas)
      for (const auto& ln : st.lines) {
        CHECK(ln.raw_text.find("Publisher") == std::string::npos);
        CHECK(ln.raw_text.find("Back matter") == std::string::npos);
      }
}

TEST_CASE("sections flatten, stray lines form implicit stanzas") {
  Edition ed = parse_edition(fixture("sections.xml"), "sections", 1);
  REQUIRE(ed.poems.size() == 2);

  const Poem& clusters = ed.poems[0];
  REQUIRE(clusters.title.has_value());
  CHECK(*clusters.title == "Clusters");
  // Two grouped stanzas inside sections, one implicit stanza from the stray
  // lines, then the tail group.
  REQUIRE(clusters.stanzas.size() == 4);
  CHECK(clusters.stanzas[0].lines.size() == 2);
  CHECK(clusters.stanzas[1].lines.size() == 1);
  CHECK(clusters.stanzas[2].lines.size() == 2);
  CHECK(clusters.stanzas[2].lines[0].raw_text == "Stray line between groups.");
  CHECK(clusters.stanzas[3].lines.size() == 3);

  // A poem with no line groups is one stanza holding every line.
  const Poem& loose = ed.poems[1];
  REQUIRE(loose.stanzas.size() == 1);
  CHECK(loose.stanzas[0].lines.size() == 3);
}

TEST_CASE("an edition with no poems is an error") {
  CHECK_THROWS_AS(parse_edition(fixture("empty.xml"), "empty", 0),
                  EmptyEditionError);
}

TEST_CASE("malformed xml surfaces as ParseError") {
  CHECK_THROWS_AS(parse_edition(fixture("bad.xml"), "bad", 0), ParseError);
}

TEST_CASE("debug text round-trips an edition") {
  Edition ed = parse_edition(fixture("sections.xml"), "sections", 3);
  std::string dump = to_debug_text(ed);
  Edition back = from_debug_text(dump);
  CHECK(back.label == ed.label);
  CHECK(back.ordinal == 3);
  REQUIRE(back.poems.size() == ed.poems.size());
  CHECK(back.stanza_count() == ed.stanza_count());
  CHECK(back.line_count() == ed.line_count());
  CHECK(to_debug_text(back) == dump);
  CHECK_THROWS_AS(from_debug_text("|stray line"), ParseError);
  CHECK_THROWS_AS(from_debug_text("garbage"), ParseError);
}
