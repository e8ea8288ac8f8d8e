#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nestobetti/building_set.hpp"

namespace nestobetti {

/// Parse failure tied to a 1-based input line (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct BuildingSetParseOptions {
  /// Insert missing singletons instead of failing validation.
  bool add_singletons = false;
};

/// `#` comments, an optional `ground: i1 i2 ...` line, then one member per
/// line as whitespace-separated labels. The ground defaults to the union of
/// the members. Axiom violations surface as ValidationError whose message
/// names the offending line.
BuildingSet parse_building_set(std::string_view text, BuildingSetParseOptions options = {});

/// Optional `vertices: ...` line, then edges `u v`. Isolated vertices only
/// come from the vertices line.
SimpleGraph parse_graph(std::string_view text);

/// Canonical text: the ground line followed by members in canonical order.
std::string emit_building_set(const BuildingSet& b);
std::string emit_graph(const SimpleGraph& g);

/// Throws ParseError(0) when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nestobetti
