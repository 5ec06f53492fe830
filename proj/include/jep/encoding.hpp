#pragma once

#include <array>
#include <memory>
#include <vector>

#include "jep/graph.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/tiling.hpp"
#include "jep/unary.hpp"

namespace jep {

/// Hub 0, rim 1..n in cycle order. Throws for n < 4.
ColoredGraph wheel(std::size_t n);

struct PointedWheel {
  int index = 1;
  ColoredGraph graph;  // W_{2i+5}
  VertexId basepoint = 0;
};

PointedWheel pointed_wheel(int index);

/// Color i is coded by W_{2i+5} with its hub as basepoint; color k is the
/// dummy used by the completion step.
struct EncodingScheme {
  int k = 12;

  static EncodingScheme for_palette(const Palette& p) { return {p.size}; }
  ColorId dummy() const { return k; }
  static constexpr std::size_t rim_size(ColorId c) { return 2 * static_cast<std::size_t>(c) + 5; }
  /// Color coded by a wheel with this rim length, or 0.
  ColorId color_of(std::size_t rim) const;
};

/// Attaches a fresh wheel at every vertex by its (single) color. Throws
/// std::invalid_argument on uncolored or multicolored vertices.
ColoredGraph wedge(const ColoredGraph& g, const EncodingScheme& s);

struct WheelCopy {
  VertexId hub = 0;
  std::vector<VertexId> rim;  // cycle order
  ColorId color = 0;
};

/// Scheme wheels free over their hub: blocks inducing W_n whose rim vertices
/// have no neighbors outside the block.
std::vector<WheelCopy> free_wheel_copies(const ColoredGraph& g, const EncodingScheme& s);

/// Hubs of free wheel copies, colored by their wheels, with induced edges.
Subgraph vee_with_map(const ColoredGraph& g, const EncodingScheme& s);
ColoredGraph vee(const ColoredGraph& g, const EncodingScheme& s);

/// H1: an induced scheme wheel plus a vertex adjacent to a rim vertex.
std::vector<ConstraintPattern> h1_constraints(const EncodingScheme& s);
/// H2: two scheme wheels (i <= j) joined at their hubs, induced.
std::vector<ConstraintPattern> h2_constraints(const EncodingScheme& s);
std::vector<ConstraintPattern> guard_constraints(const EncodingScheme& s);

/// Lifts an injective colored pattern: each vertex becomes the hub of an
/// induced wheel of its color, rim vertices are forbidden from touching
/// anything outside their wheel, hub pairs keep the pattern's edges and
/// forbidden pairs. Throws for non-injective or not singly colored patterns.
ConstraintPattern wedge_pattern(const ConstraintPattern& p, const EncodingScheme& s);

/// The colored class before the encoding: the unary constraints over the
/// wider palette, no edges between grid vertices, no colored scheme wheels,
/// no uncolored vertices.
HereditaryClass compile_colored_class(const TilingProblem& t, const Palette& palette = kPurePalette);

/// Checks `colored` on vee(g) and reports witnesses as hubs of g.
SemanticRule vee_lift_rule(std::shared_ptr<const HereditaryClass> colored, const EncodingScheme& s);

/// Guards on the pure graph plus the colored class checked on vee(g).
HereditaryClass compile_pure_class(const TilingProblem& t, const Palette& palette = kPurePalette);

/// Attaches a dummy wheel at every vertex that lies in no free wheel copy.
ColoredGraph complete_with_dummies(const ColoredGraph& g, const EncodingScheme& s);

struct PureJointEmbedOptions {
  bool check_inputs = true;
  std::uint64_t budget = kDefaultBudget;
  Palette palette = kPurePalette;
  /// Class for the input check; compile_pure_class(t, palette) when null.
  std::shared_ptr<const HereditaryClass> cls;
};

/// Completes both graphs, then adds the stage-1 tiling edges between hubs.
ColoredGraph complete_and_joint_embed_pure(const ColoredGraph& a, const ColoredGraph& b,
                                           const TilingProblem& t, const TilingMap& theta,
                                           const PureJointEmbedOptions& opts = {});

/// Edges of `after` missing from `before` (same vertex ids) that lie in a
/// triangle of `after`.
std::vector<Edge> added_edges_in_triangles(const ColoredGraph& before, const ColoredGraph& after);

/// Triangles not contained in a single free wheel copy.
std::vector<std::array<VertexId, 3>> stray_triangles(const ColoredGraph& g, const EncodingScheme& s);

}  // namespace jep
