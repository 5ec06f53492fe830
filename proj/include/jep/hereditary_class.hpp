#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jep/graph.hpp"
#include "jep/palette.hpp"
#include "jep/pattern.hpp"

namespace jep {

enum class Verdict { kPass, kFail, kIndeterminate };

std::string to_string(Verdict v);

struct Violation {
  std::string constraint;          // e.g. "c2", "H1", "no-proper-image"
  std::string source;              // pattern name or semantic rule name
  std::vector<VertexId> witness;   // host vertices, in pattern-vertex order for patterns
  std::string detail;
};

/// A constraint evaluated by code instead of a pattern. `find` returns up to
/// `limit` violations and may throw BudgetExceeded.
struct SemanticRule {
  std::string name;
  std::string constraint;
  /// Cross-check rules restate a pattern group; the others are the only
  /// encoding of their constraint and always run.
  bool cross_check = true;
  /// Manifest line used by the bundle writer.
  std::string manifest;
  std::function<std::vector<Violation>(const ColoredGraph&, std::size_t limit,
                                       std::uint64_t budget)>
      find;
};

struct ClassPattern {
  std::string constraint;
  ConstraintPattern pattern;
};

struct HereditaryClass {
  std::string name;
  Palette palette;
  std::vector<ClassPattern> patterns;
  std::vector<SemanticRule> rules;

  std::vector<std::string> constraint_ids() const;
};

enum class CheckMode {
  kFull,      // patterns and every rule
  kPatterns,  // patterns plus rules that are not cross-checks
  kSemantic,  // rules only
};

struct CheckOptions {
  CheckMode mode = CheckMode::kPatterns;
  std::uint64_t budget = kDefaultBudget;
  /// Stop at the first violation.
  bool first_only = false;
  /// Witnesses reported per pattern or rule.
  std::size_t per_source = 1;
  /// When non-empty, only these constraint ids are checked.
  std::vector<std::string> only;
};

struct CheckResult {
  Verdict verdict = Verdict::kPass;
  std::vector<Violation> violations;
  /// Patterns or rules whose search ran out of budget.
  std::vector<std::string> exhausted;

  bool pass() const { return verdict == Verdict::kPass; }
};

/// Membership test with violation report. A violation found anywhere gives
/// kFail even when some other search was cut off; otherwise any cut-off gives
/// kIndeterminate.
CheckResult check_constraints(const ColoredGraph& g, const HereditaryClass& cls,
                              const CheckOptions& opts = {});

bool is_member(const ColoredGraph& g, const HereditaryClass& cls,
               std::uint64_t budget = kDefaultBudget);

std::string format_violation(const Violation& v, const Palette& palette, const ColoredGraph& g);

}  // namespace jep
