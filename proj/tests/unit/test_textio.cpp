#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "infoloss/harness.hpp"
#include "infoloss/textio.hpp"

using namespace infoloss;

TEST_CASE("canonical space files round-trip byte for byte") {
  const std::string text =
      "space coin\n"
      "a 1/2\n"
      "b 1/2\n";
  const NamedSpace doc = parse_space_file(text);
  CHECK(doc.name == "coin");
  CHECK(doc.space == validate_space({"a", "b"}, {Weight(1, 2), Weight(1, 2)}));
  CHECK(serialize_space(doc) == text);
}

TEST_CASE("canonical map files round-trip byte for byte") {
  const std::string text =
      "space dom\n"
      "a 1/2\n"
      "b 1/2\n"
      "\n"
      "space cod\n"
      "c 1\n"
      "\n"
      "map collapse : dom -> cod\n"
      "a -> c\n"
      "b -> c\n";
  const NamedMap doc = parse_map_file(text);
  CHECK(doc.name == "collapse");
  CHECK(doc.map.domain().label(0) == "a");
  CHECK(doc.map.target_label(0) == "c");
  CHECK(serialize_map(doc) == text);
}

TEST_CASE("comments and blank lines are ignored; section order is free") {
  const std::string text =
      "# a comment\n"
      "map f : d -> c   # trailing comment\n"
      "x -> y\n"
      "\n"
      "space c\n"
      "y 2/3\n"
      "\n"
      "space d\n"
      "x 2/3\n";
  const NamedMap doc = parse_map_file(text);
  CHECK(doc.map.domain().weight(0) == Weight(2, 3));
  CHECK(doc.map.codomain().label(0) == "y");
}

TEST_CASE("pipeline files list stage paths in order") {
  const std::string text =
      "pipeline demo\n"
      "first.map\n"
      "second.map\n";
  const PipelineDoc doc = parse_pipeline_file(text);
  CHECK(doc.name == "demo");
  CHECK(doc.stage_paths == std::vector<std::string>{"first.map", "second.map"});
  CHECK(serialize_pipeline(doc) == text);

  CHECK_THROWS_AS(parse_pipeline_file("pipeline empty\n"), ParseError);
  CHECK_THROWS_AS(parse_pipeline_file("first.map\n"), ParseError);
}

TEST_CASE("malformed documents raise parse errors with line numbers") {
  try {
    parse_space_file("space s\na 1/2 extra\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(parse_space_file("a 1/2\n"), ParseError);             // before any header
  CHECK_THROWS_AS(parse_space_file("space s\na zz\n"), ParseError);     // bad weight
  CHECK_THROWS_AS(parse_space_file("space\n"), ParseError);             // missing name
  CHECK_THROWS_AS(parse_space_file("space s\nspace t\n"), ParseError);  // two blocks
  CHECK_THROWS_AS(parse_map_file("map f : d -> c\nx -> y\n"), ParseError);  // unknown spaces
  CHECK_THROWS_AS(parse_map_file("space d\nx 1\nspace c\ny 1\n"
                                 "map f : d -> c\nx -> y\nx -> y\n"),
                  ParseError);  // duplicate assignment
  CHECK_THROWS_AS(parse_map_file("space d\nx 1\n"), ParseError);  // no map block
  CHECK_THROWS_AS(parse_space_file("space s\na\n"), ParseError);  // missing weight
}

TEST_CASE("structural violations surface as validation errors") {
  CHECK_THROWS_AS(parse_space_file("space s\na -1/2\n"), ValidationError);
  CHECK_THROWS_AS(parse_space_file("space s\na 1/2\na 1/2\n"), ValidationError);
  CHECK_THROWS_AS(parse_map_file("space d\nx 1/2\n\nspace c\ny 1\n\n"
                                 "map f : d -> c\nx -> y\n"),
                  ValidationError);  // pushforward mismatch
  CHECK_THROWS_AS(parse_map_file("space d\nx 1\n\nspace c\ny 1\n\n"
                                 "map f : d -> c\n"),
                  ValidationError);  // unmapped point
}

TEST_CASE("--infer-codomain re-derives the codomain from the assignment") {
  const std::string text =
      "space d\n"
      "a 1/2\n"
      "b 1/2\n"
      "\n"
      "space c\n"
      "y\n"
      "z\n"
      "\n"
      "map f : d -> c\n"
      "a -> y\n"
      "b -> y\n";
  const NamedMap doc = parse_map_file(text, /*infer_codomain=*/true);
  CHECK(doc.map.codomain() == validate_space({"y", "z"}, {Weight(1), Weight(0)}));

  // Without the flag the same file is rejected for the missing weights.
  CHECK_THROWS_AS(parse_map_file(text, false), ParseError);

  // Stated weights are ignored when inferring.
  const std::string stated =
      "space d\na 1\n\nspace c\ny 7/3\n\nmap f : d -> c\na -> y\n";
  CHECK(parse_map_file(stated, true).map.codomain().weight(0) == Weight(1));
}

TEST_CASE("generated maps survive a serialize/parse/serialize cycle") {
  GeneratorConfig cfg;
  cfg.seed = 51;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto kind = t % 2 ? MeasureKind::general : MeasureKind::probability;
    const NamedMap doc{"f", "dom", "cod", gen_map(cfg, t, kind)};
    const std::string once = serialize_map(doc);
    const NamedMap back = parse_map_file(once);
    CHECK(back.map == doc.map);
    CHECK(serialize_map(back) == once);
  }
}

TEST_CASE("serializers reject labels the format cannot carry") {
  const auto space = validate_space({"two words"}, {Weight(1)});
  CHECK_THROWS_AS(serialize_space(NamedSpace{"s", space}), std::invalid_argument);
  CHECK_THROWS_AS(serialize_space(NamedSpace{"bad name", validate_space({"a"}, {Weight(1)})}),
                  std::invalid_argument);
}
