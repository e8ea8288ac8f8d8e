#include "nestobetti/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace nestobetti {

namespace {

struct Line {
  int number;
  std::string_view body;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out.push_back({number, line});
    if (text.empty()) break;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_label(std::string_view tok, int line) {
  int v = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected a positive integer label, got '" + std::string(tok) + "'");
  }
  if (v < 1 || v > ElementSet::kMaxLabel) {
    throw ParseError(line, "label " + std::string(tok) + " outside [1, 64]");
  }
  return v;
}

// Returns true and strips the keyword when the line starts with `key:`.
bool take_keyword(std::string_view& body, std::string_view key) {
  std::size_t i = 0;
  while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  if (body.substr(i, key.size()) != key) return false;
  std::size_t j = i + key.size();
  while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j]))) ++j;
  if (j >= body.size() || body[j] != ':') return false;
  body = body.substr(j + 1);
  return true;
}

ElementSet parse_set(std::string_view body, int line) {
  ElementSet s;
  for (std::string_view tok : tokens(body)) s = s.with(parse_label(tok, line));
  return s;
}

}  // namespace

BuildingSet parse_building_set(std::string_view text, BuildingSetParseOptions options) {
  std::optional<ElementSet> ground;
  std::vector<ElementSet> members;
  std::map<std::uint64_t, int> line_of;
  int ground_line = 0;
  for (Line line : split_lines(text)) {
    if (take_keyword(line.body, "ground")) {
      if (ground) throw ParseError(line.number, "duplicate ground declaration");
      ground = parse_set(line.body, line.number);
      ground_line = line.number;
      continue;
    }
    if (tokens(line.body).empty()) continue;
    const ElementSet m = parse_set(line.body, line.number);
    members.push_back(m);
    line_of.emplace(m.bits(), line.number);
  }
  ElementSet g;
  if (ground) {
    g = *ground;
  } else {
    for (ElementSet m : members) g |= m;
  }
  if (options.add_singletons) {
    for (int v : g) members.push_back(ElementSet::singleton(v));
  }
  try {
    return BuildingSet::validate(members, g);
  } catch (const ValidationError& e) {
    int where = ground_line;
    for (ElementSet w : e.witness()) {
      if (const auto it = line_of.find(w.bits()); it != line_of.end()) {
        where = it->second;
        break;
      }
    }
    const std::string prefix = where > 0 ? "line " + std::to_string(where) + ": " : "";
    throw ValidationError(e.code(), prefix + e.what(), e.witness(), e.label());
  }
}

SimpleGraph parse_graph(std::string_view text) {
  std::optional<ElementSet> declared;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_line;
  for (Line line : split_lines(text)) {
    if (take_keyword(line.body, "vertices")) {
      if (declared) throw ParseError(line.number, "duplicate vertices declaration");
      declared = parse_set(line.body, line.number);
      continue;
    }
    const auto toks = tokens(line.body);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(line.number, "an edge line needs exactly two labels");
    const int u = parse_label(toks[0], line.number);
    const int v = parse_label(toks[1], line.number);
    if (u == v) throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line.number) + ": loop edge at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    edge_line.push_back(line.number);
  }
  ElementSet vertices;
  if (declared) {
    vertices = *declared;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!vertices.contains(edges[i].first) || !vertices.contains(edges[i].second)) {
        throw ParseError(edge_line[i], "edge endpoint missing from the vertices line");
      }
    }
  } else {
    for (auto [u, v] : edges) vertices = vertices.with(u).with(v);
  }
  return SimpleGraph(vertices, edges);
}

std::string emit_building_set(const BuildingSet& b) {
  std::ostringstream out;
  out << "ground:";
  for (int v : b.ground()) out << ' ' << v;
  out << '\n';
  for (ElementSet m : b.members()) {
    bool first = true;
    for (int v : m) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (int v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace nestobetti
