#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jep/pattern.hpp"

namespace jep {

using Tile = int;

/// Tiles are 1..tile_count. (l,k) in h_forbidden: k may not sit directly right
/// of l. (j,i) in v_forbidden: i may not sit directly above j.
struct TilingProblem {
  int tile_count = 1;
  std::set<std::pair<Tile, Tile>> h_forbidden;
  std::set<std::pair<Tile, Tile>> v_forbidden;

  bool h_ok(Tile left, Tile right) const { return !h_forbidden.count({left, right}); }
  bool v_ok(Tile below, Tile above) const { return !v_forbidden.count({below, above}); }
};

void validate(const TilingProblem& t);

/// A finite patch (cells outside [0,w)x[0,h) are unassigned; 0 marks a blank
/// cell) or a periodic map with periods (w,h).
class TilingMap {
 public:
  enum class Kind { kPatch, kPeriodic };

  static TilingMap patch(int width, int height);
  static TilingMap periodic(int p, int q);

  Kind kind() const { return kind_; }
  bool is_periodic() const { return kind_ == Kind::kPeriodic; }
  int width() const { return width_; }
  int height() const { return height_; }

  /// 0 when unassigned. Periodic maps are total on the quarter plane.
  Tile at(int x, int y) const;
  void set(int x, int y, Tile tile);

  /// The n x n patch at the origin.
  TilingMap window(int n) const;

  bool operator==(const TilingMap&) const = default;

 private:
  TilingMap(Kind kind, int w, int h);
  Kind kind_ = Kind::kPatch;
  int width_ = 0;
  int height_ = 0;
  std::vector<Tile> cells_;
};

struct TilingViolation {
  int x = 0, y = 0;        // the lower/left cell
  bool horizontal = true;  // otherwise vertical: (x,y) below (x,y+1)
  Tile first = 0, second = 0;
  std::string describe() const;
};

struct PatchCheck {
  bool ok = true;
  std::vector<TilingViolation> violations;
};

/// Periodic maps are checked on one fundamental domain with wrap-around.
PatchCheck check_patch(const TilingProblem& t, const TilingMap& m);

/// Throws BudgetExceeded when the search is cut off; nullopt is a proof that
/// no n x n patch exists.
std::optional<TilingMap> solve_bounded(const TilingProblem& t, int n,
                                       std::uint64_t budget = kDefaultBudget);

/// Tries periods in order of p*q. nullopt is inconclusive.
std::optional<TilingMap> solve_periodic(const TilingProblem& t, int max_period,
                                        std::uint64_t budget = kDefaultBudget);

// Text formats. Problem: `tiles <n>`, `hnot <l> <k>`, `vnot <j> <i>`.
// Map: `patch <w> <h>` or `periodic <p> <q>` followed by one row per y,
// y = 0 first, 0 = blank.
TilingProblem parse_tiling_problem(const std::string& text);
std::string format_tiling_problem(const TilingProblem& t);
TilingMap parse_tiling_map(const std::string& text);
std::string format_tiling_map(const TilingMap& m);

}  // namespace jep
