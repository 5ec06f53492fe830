#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "jep/graph.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/tiling.hpp"

namespace jep {

class AmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexPair = std::pair<VertexId, VertexId>;

/// The coded relations of a colored graph. Superscript i is the array index.
struct DerivedRelations {
  int tile_count = 1;
  std::array<std::set<VertexPair>, 2> arrow;   // (predecessor, successor)
  std::array<std::set<VertexPair>, 2> proj_x;  // (grid, path)
  std::array<std::set<VertexPair>, 2> proj_y;
  std::set<std::tuple<VertexId, VertexId, int>> tau_i;  // (G1 vertex, tile, type)
  std::set<VertexPair> tau;                             // (G0 vertex, tile)
  /// Simple paths h E v1 E ... E v_t inside T1, per G1 vertex (capped).
  std::map<VertexId, std::vector<std::vector<VertexId>>> tile_chains;

  std::vector<VertexId> successors(int i, VertexId x) const;
  std::vector<VertexId> predecessors(int i, VertexId y) const;
  std::vector<VertexId> x_projections(int i, VertexId g) const;
  std::vector<VertexId> y_projections(int i, VertexId g) const;
  /// Tiles of type `type` associated to h.
  std::vector<VertexId> tiles(VertexId h, int type) const;
  bool full_tile_set(VertexId h) const;
};

DerivedRelations derive_relations(const ColoredGraph& g, int tile_count);

/// The unary-language class for t. Constraint (1) ranges over every color of
/// `palette`, so the same compiler serves the wider palettes of later stages.
HereditaryClass compile_unary_class(const TilingProblem& t, const Palette& palette = kUnaryPalette);

/// Vertex layout of the canonical truncations: path p_0..p_{n-1}, then grid
/// g_{i,j} row by row (j outer), then coding vertices, then (B only) tiles.
struct CanonicalLayout {
  int n = 1;
  int tiles = 0;  // 0 for A

  VertexId path(int i) const { return static_cast<VertexId>(i); }
  VertexId grid(int i, int j) const { return static_cast<VertexId>(n + j * n + i); }
  std::size_t model_size() const { return n + 2 * (n - 1) + 3 * n * n; }
  VertexId tile(int i, int j, int k) const {
    return static_cast<VertexId>(model_size() + (j * n + i) * tiles + (k - 1));
  }
  std::size_t size() const { return model_size() + static_cast<std::size_t>(tiles) * n * n; }
};

ColoredGraph canonical_A(int n, const TilingProblem& t);
ColoredGraph canonical_B(int n, const TilingProblem& t);

using Coordinates = std::map<VertexId, std::pair<int, int>>;

/// Coordinates of every grid vertex (either superscript) that has them.
/// Throws AmbiguityError if some grid vertex gets two.
Coordinates coordinates(const ColoredGraph& g);

struct JointEmbedOptions {
  bool check_inputs = true;
  std::uint64_t budget = kDefaultBudget;
};

/// Disjoint union of a and b plus every tiling edge the procedure allows.
/// Throws std::invalid_argument when an input is outside the class or theta
/// is undefined at a needed coordinate.
ColoredGraph joint_embed_unary(const ColoredGraph& a, const ColoredGraph& b, const TilingMap& theta,
                               const TilingProblem& t, const JointEmbedOptions& opts = {});

/// Designated path for superscript i: the least-id O^i vertex followed by
/// least-id successors, at most n vertices. Empty without an origin.
std::vector<VertexId> spine(const DerivedRelations& rel, const ColoredGraph& g, int i, int n);

/// Reads the n x n window along the designated paths: cell (a,b) gets the
/// least k such that a G0 vertex projecting to spine0[a], spine0[b] is
/// adjacent to a tile of type k of a G1 vertex projecting to spine1[a],
/// spine1[b]. Cells without such a pair stay blank.
TilingMap extract_tiling(const ColoredGraph& c, int n, int tile_count);

}  // namespace jep
