#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "infoloss/measure.hpp"

namespace infoloss {

// Line-oriented text formats. '#' starts a comment, blank lines are
// ignored, and all fields are whitespace-separated tokens. Weights are
// exact rational strings ("1/2", "0", "3").
//
//   space file:     "space <name>" then one "<label> <weight>" line per point
//   map file:       two space blocks plus
//                   "map <name> : <domainSpace> -> <codomainSpace>"
//                   followed by one "<domainLabel> -> <codomainLabel>" line
//                   per domain point
//   pipeline file:  "pipeline <name>" then one map-file path per line,
//                   stages listed in application order
//
// Parsing a canonical file (the serializers' output) and serializing again
// reproduces it byte for byte.

struct NamedSpace {
  std::string name;
  FiniteMeasureSpace space;
};

struct NamedMap {
  std::string name;
  std::string domain_name;
  std::string codomain_name;
  MeasurePreservingMap map;
};

struct PipelineDoc {
  std::string name;
  std::vector<std::string> stage_paths;
};

std::string serialize_space(const NamedSpace& doc);
std::string serialize_map(const NamedMap& doc);
std::string serialize_pipeline(const PipelineDoc& doc);

/// Throw ParseError on malformed text and ValidationError when the parsed
/// objects violate a structural invariant (bad weight, bad pushforward, ...).
NamedSpace parse_space_file(std::string_view text);

/// With infer_codomain set, stated codomain weights are ignored and the
/// codomain measure is re-derived as the exact pushforward; point lines in
/// the codomain block may then omit the weight.
NamedMap parse_map_file(std::string_view text, bool infer_codomain = false);

PipelineDoc parse_pipeline_file(std::string_view text);

}  // namespace infoloss
