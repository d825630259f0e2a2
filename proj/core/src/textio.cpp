#include "infoloss/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace infoloss {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (pos > text.size() && raw.empty()) break;

    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Weight parse_weight(const std::string& token, int line) {
  auto value = Rational::parse(token);
  if (!value) throw ParseError(line, "malformed weight \"" + token + "\"");
  return *value;
}

struct SpaceBlock {
  std::string name;
  int line = 0;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::vector<bool> weight_given;
};

struct MapBlock {
  std::string name;
  std::string domain_name;
  std::string codomain_name;
  int line = 0;
  std::unordered_map<std::string, std::string> assignment;
};

struct Document {
  std::vector<SpaceBlock> spaces;
  std::vector<MapBlock> maps;
  std::string pipeline_name;
  int pipeline_line = 0;
  std::vector<std::string> stage_paths;
};

Document parse_document(std::string_view text) {
  Document doc;
  enum class Section { none, space, map, pipeline };
  Section section = Section::none;

  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "space") {
      if (t.size() != 2) throw ParseError(line.number, "expected \"space <name>\"");
      doc.spaces.push_back(SpaceBlock{t[1], line.number, {}, {}, {}});
      section = Section::space;
      continue;
    }
    if (t[0] == "map") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->") {
        throw ParseError(line.number, "expected \"map <name> : <domain> -> <codomain>\"");
      }
      doc.maps.push_back(MapBlock{t[1], t[3], t[5], line.number, {}});
      section = Section::map;
      continue;
    }
    if (t[0] == "pipeline") {
      if (t.size() != 2) throw ParseError(line.number, "expected \"pipeline <name>\"");
      if (!doc.pipeline_name.empty()) throw ParseError(line.number, "duplicate pipeline header");
      doc.pipeline_name = t[1];
      doc.pipeline_line = line.number;
      section = Section::pipeline;
      continue;
    }

    switch (section) {
      case Section::none:
        throw ParseError(line.number, "content before any section header");
      case Section::space: {
        auto& block = doc.spaces.back();
        if (t.size() == 1) {
          block.labels.push_back(t[0]);
          block.weights.push_back(Weight(0));
          block.weight_given.push_back(false);
        } else if (t.size() == 2) {
          block.labels.push_back(t[0]);
          block.weights.push_back(parse_weight(t[1], line.number));
          block.weight_given.push_back(true);
        } else {
          throw ParseError(line.number, "expected \"<label> <weight>\"");
        }
        break;
      }
      case Section::map: {
        if (t.size() != 3 || t[1] != "->") {
          throw ParseError(line.number, "expected \"<domainLabel> -> <codomainLabel>\"");
        }
        auto& block = doc.maps.back();
        if (!block.assignment.emplace(t[0], t[2]).second) {
          throw ParseError(line.number, "duplicate assignment for label \"" + t[0] + "\"");
        }
        break;
      }
      case Section::pipeline: {
        if (t.size() != 1) throw ParseError(line.number, "expected one map-file path per line");
        doc.stage_paths.push_back(t[0]);
        break;
      }
    }
  }
  return doc;
}

const SpaceBlock& find_space(const Document& doc, const std::string& name, int refer_line) {
  for (const auto& block : doc.spaces) {
    if (block.name == name) return block;
  }
  throw ParseError(refer_line, "space \"" + name + "\" is not defined in this file");
}

FiniteMeasureSpace build_space(const SpaceBlock& block) {
  for (std::size_t i = 0; i < block.labels.size(); ++i) {
    if (!block.weight_given[i]) {
      throw ParseError(block.line, "label \"" + block.labels[i] + "\" in space \"" + block.name +
                                       "\" is missing its weight");
    }
  }
  return FiniteMeasureSpace(block.labels, block.weights);
}

void require_token(const std::string& value, const char* kind) {
  if (value.empty()) throw std::invalid_argument(std::string(kind) + " is empty");
  if (value == "->" || value == ":") {
    throw std::invalid_argument(std::string(kind) + " \"" + value + "\" is reserved");
  }
  for (char c : value) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
      throw std::invalid_argument(std::string(kind) + " \"" + value +
                                  "\" contains whitespace or '#'");
    }
  }
}

void write_space(std::ostringstream& out, const std::string& name,
                 const FiniteMeasureSpace& space) {
  require_token(name, "space name");
  out << "space " << name << "\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    require_token(space.label(i), "label");
    out << space.label(i) << " " << space.weight(i).str() << "\n";
  }
}

}  // namespace

std::string serialize_space(const NamedSpace& doc) {
  std::ostringstream out;
  write_space(out, doc.name, doc.space);
  return out.str();
}

std::string serialize_map(const NamedMap& doc) {
  std::ostringstream out;
  write_space(out, doc.domain_name, doc.map.domain());
  out << "\n";
  write_space(out, doc.codomain_name, doc.map.codomain());
  out << "\n";
  require_token(doc.name, "map name");
  out << "map " << doc.name << " : " << doc.domain_name << " -> " << doc.codomain_name << "\n";
  for (std::size_t i = 0; i < doc.map.domain().size(); ++i) {
    out << doc.map.domain().label(i) << " -> " << doc.map.target_label(i) << "\n";
  }
  return out.str();
}

std::string serialize_pipeline(const PipelineDoc& doc) {
  std::ostringstream out;
  require_token(doc.name, "pipeline name");
  out << "pipeline " << doc.name << "\n";
  for (const auto& path : doc.stage_paths) {
    require_token(path, "stage path");
    out << path << "\n";
  }
  return out.str();
}

NamedSpace parse_space_file(std::string_view text) {
  Document doc = parse_document(text);
  if (!doc.maps.empty() || !doc.pipeline_name.empty()) {
    throw ParseError(doc.maps.empty() ? doc.pipeline_line : doc.maps.front().line,
                     "space file cannot contain map or pipeline sections");
  }
  if (doc.spaces.size() != 1) {
    throw ParseError(1, "space file must contain exactly one space block, found " +
                            std::to_string(doc.spaces.size()));
  }
  return NamedSpace{doc.spaces.front().name, build_space(doc.spaces.front())};
}

NamedMap parse_map_file(std::string_view text, bool infer_codomain) {
  Document doc = parse_document(text);
  if (!doc.pipeline_name.empty()) {
    throw ParseError(doc.pipeline_line, "map file cannot contain a pipeline section");
  }
  if (doc.maps.size() != 1) {
    throw ParseError(1, "map file must contain exactly one map block, found " +
                            std::to_string(doc.maps.size()));
  }
  const MapBlock& mb = doc.maps.front();
  const SpaceBlock& dom_block = find_space(doc, mb.domain_name, mb.line);
  const SpaceBlock& cod_block = find_space(doc, mb.codomain_name, mb.line);

  FiniteMeasureSpace domain = build_space(dom_block);
  FiniteMeasureSpace codomain;
  if (infer_codomain) {
    // Re-derive the codomain measure as the exact pushforward of the domain.
    FiniteMeasureSpace shape(cod_block.labels,
                             std::vector<Weight>(cod_block.labels.size(), Weight(0)));
    std::vector<Weight> pushed(shape.size(), Weight(0));
    for (std::size_t i = 0; i < domain.size(); ++i) {
      auto it = mb.assignment.find(domain.label(i));
      if (it == mb.assignment.end()) {
        throw ValidationError(errc::unmapped_point,
                              "domain label \"" + domain.label(i) + "\" has no assignment");
      }
      auto j = shape.index_of(it->second);
      if (!j) {
        throw ValidationError(errc::target_not_in_codomain,
                              "domain label \"" + domain.label(i) + "\" maps to \"" +
                                  it->second + "\" which is not a codomain label");
      }
      pushed[*j] += domain.weight(i);
    }
    codomain = FiniteMeasureSpace(cod_block.labels, std::move(pushed));
  } else {
    codomain = build_space(cod_block);
  }
  MeasurePreservingMap map(std::move(domain), std::move(codomain), mb.assignment);
  return NamedMap{mb.name, mb.domain_name, mb.codomain_name, std::move(map)};
}

PipelineDoc parse_pipeline_file(std::string_view text) {
  Document doc = parse_document(text);
  if (!doc.spaces.empty() || !doc.maps.empty()) {
    throw ParseError(doc.spaces.empty() ? doc.maps.front().line : doc.spaces.front().line,
                     "pipeline file cannot contain space or map sections");
  }
  if (doc.pipeline_name.empty()) {
    throw ParseError(1, "missing \"pipeline <name>\" header");
  }
  if (doc.stage_paths.empty()) {
    throw ParseError(doc.pipeline_line, "pipeline has no stages");
  }
  return PipelineDoc{doc.pipeline_name, doc.stage_paths};
}

}  // namespace infoloss
