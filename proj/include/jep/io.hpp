#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "jep/graph.hpp"
#include "jep/pattern.hpp"

namespace jep {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedGraph {
  std::string name;
  ColoredGraph graph;
};

// Graph text format:
//
//   graph <name> palette=<k>
//   v <id> colors: c1,c2,...      (the colors clause is optional; may be
//                                   wrapped in brackets)
//   e <id> <id>
//
// Pattern files use the header `pattern <name> palette=<k>` and may also hold
//   f <id> <id>          forbidden pair
//   mode injective|quotient
//   d <id> <id>          pair that must stay distinct under `mode quotient`
//
// Ids are arbitrary non-negative integers, renumbered densely in order of
// appearance. Blank lines and `#` comments are ignored.

NamedGraph parse_graph(std::istream& in);
NamedGraph parse_graph(const std::string& text);
std::string format_graph(const ColoredGraph& g, const std::string& name);

ConstraintPattern parse_pattern(std::istream& in);
ConstraintPattern parse_pattern(const std::string& text);
std::string format_pattern(const ConstraintPattern& p);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace jep
