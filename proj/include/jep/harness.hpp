#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jep/graph.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/jhp.hpp"
#include "jep/tiling.hpp"

namespace jep {

struct WitnessOptions {
  /// Candidate graphs checked against the class before giving up.
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t budget = kDefaultBudget;
};

struct WitnessResult {
  Verdict verdict = Verdict::kFail;  // pass: found, fail: none
  ColoredGraph witness;
  std::vector<VertexId> left, right;  // a -> witness, b -> witness
  std::uint64_t candidates = 0;
  std::string detail;
};

/// Joint embedding witnesses on f(A) u g(B): every partial identification of
/// a-vertices with b-vertices that agrees on colors and adjacency, and every
/// set of cross edges between the rest, pruned as soon as a fully decided
/// induced part leaves the class.
WitnessResult jep_witness_search(const ColoredGraph& a, const ColoredGraph& b,
                                 const HereditaryClass& cls, const WitnessOptions& opts = {});

/// JHP witnesses for two-relation classes: a member on at most |a|+|b| points
/// receiving homomorphisms from both.
std::optional<TwoRelationStructure> jhp_witness_search(const TwoRelationStructure& a,
                                                       const TwoRelationStructure& b,
                                                       const TwoRelationClass& cls);

enum class Stage { kUnary, kPure, kJhp };

std::string to_string(Stage s);
Stage parse_stage(const std::string& s);

Palette stage_palette(Stage s);
HereditaryClass compile_stage_class(const TilingProblem& t, Stage s);

/// Canonical truncation of depth n for the stage: A* or B* itself, its wedge,
/// or the wedge of its augmentation.
ColoredGraph stage_canonical(const TilingProblem& t, Stage s, int n, bool b_side);

/// The stage's joint-embedding procedure (inputs are not re-checked).
ColoredGraph stage_joint_embed(const TilingProblem& t, Stage s, const ColoredGraph& a,
                               const ColoredGraph& b, const TilingMap& theta);

/// Readout of an n x n window; pure-stage graphs are read through vee.
TilingMap stage_extract(const TilingProblem& t, Stage s, const ColoredGraph& c, int n);

struct ExperimentOptions {
  int max_period = 6;
  std::uint64_t budget = kDefaultBudget;
  /// Exhaustive witness search is tried when |A|+|B| is at most this.
  std::size_t search_limit = 12;
  WitnessOptions witness;
};

struct ExperimentReport {
  std::string kind;  // "yes" or "no"
  std::string instance;
  std::string stage;
  int depth = 0;
  std::string periodic_oracle;  // found / none / indeterminate / skipped
  std::string bounded_oracle;
  std::string theta;
  std::string joint_embedding;
  std::vector<std::pair<std::string, std::string>> membership;  // subject -> verdict
  std::vector<std::string> violations;
  std::string extracted;
  std::string refutation;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::kIndeterminate;  // pass: claim established
  double seconds = 0.0;

  std::string to_text() const;
  std::string to_json() const;
};

ExperimentReport run_yes_experiment(const TilingProblem& t, int n, Stage stage,
                                    const ExperimentOptions& opts = {});

ExperimentReport run_no_experiment(const TilingProblem& t, int n, const ExperimentOptions& opts = {});

}  // namespace jep
