#pragma once

#include <filesystem>
#include <string>

#include "jep/harness.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/tiling.hpp"

namespace jep {

// Bundle directory layout:
//
//   manifest.txt     class <name>
//                    stage unary|colored|pure|jhp
//                    palette <k> dummy=<d> c5=<0|1>
//                    pattern <constraint> patterns/<file>
//                    semantic: <rule>
//   tiling.txt       the tiling problem
//   patterns/        one pattern file per constraint pattern
//   encoding.toml    wheel scheme (pure and jhp)
//   colored/         bundle of the colored class read through vee (pure, jhp)
//
// Semantic rules are named, not serialized: the reader rebuilds them from
// the tiling problem, except `vee-lift colored/`, which wraps the sub-bundle.

void write_bundle(const std::filesystem::path& dir, const TilingProblem& t, Stage stage);

struct Bundle {
  std::string stage;
  TilingProblem problem;
  HereditaryClass cls;
};

/// Throws ParseError on malformed or unknown manifest lines.
Bundle read_bundle(const std::filesystem::path& dir);

}  // namespace jep
