#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jep/encoding.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/pattern.hpp"

namespace jep {

struct AugmentedModel {
  struct Copy {
    Edge pair;                   // attachment vertices of the base
    std::vector<VertexId> added;  // hub, then the three free rim vertices
  };
  ColoredGraph graph;
  std::size_t base_size = 0;
  std::vector<Copy> copies;
};

/// Over every non-adjacent pair of g, free-joins a W5 whose rim vertices 1
/// and 3 are identified with the pair. New vertices are colored C5.
AugmentedModel augment(const ColoredGraph& g);

/// Graphs that receive a vertex-surjective homomorphism from w other than an
/// isomorphism, up to isomorphism. Throws ExpansionCapExceeded when more than
/// size_cap candidates would be generated.
std::vector<ColoredGraph> proper_hom_images(const ColoredGraph& w, std::size_t size_cap = 200'000);

/// A homomorphism W_n -> g (hub 0, rim 1..n) that is not an induced
/// embedding, if any. Exists iff some neighborhood of g has odd girth < n.
std::optional<Embedding> non_embedding_wheel_hom(std::size_t n, const ColoredGraph& g);

std::optional<std::array<VertexId, 4>> find_k4(const ColoredGraph& g);

struct ImageCheck {
  Verdict verdict = Verdict::kPass;
  std::string clause;  // "K4" or "W<n>"
  Embedding witness;
};

/// No K4, and every homomorphism from a scheme wheel into g is an induced
/// embedding.
ImageCheck no_proper_image_check(const ColoredGraph& g, const EncodingScheme& s);

/// The pure class over the C5-extended palette plus the K4 pattern and the
/// proper-image rule for every scheme wheel.
HereditaryClass compile_jhp_class(const TilingProblem& t, const Palette& palette = kJhpPalette);

struct RigidOptions {
  bool require_member = true;
  /// Budget for each defect search (one per non-adjacent pair).
  std::uint64_t pair_budget = 2'000'000;
  std::uint64_t budget = kDefaultBudget;
};

struct RigidResult {
  enum class Status { kRigid, kNotRigid, kIndeterminate, kInapplicable };
  Status status = Status::kRigid;
  Embedding witness;  // non-embedding homomorphism a -> c
  std::string detail;
};

std::string to_string(RigidResult::Status s);

/// Looks for a homomorphism a -> c that is not an induced embedding: one that
/// merges or joins some non-adjacent pair of a.
RigidResult rigid_homomorphism_check(const ColoredGraph& a, const ColoredGraph& c,
                                     const HereditaryClass& cls, const RigidOptions& opts = {});

/// Structure with an edge relation E and a non-edge relation N.
struct TwoRelationStructure {
  std::string name;
  std::size_t size = 0;
  std::set<Edge> e;
  std::set<Edge> n;

  /// E and N partition the pairs.
  bool valid() const;
  static TwoRelationStructure from_graph(const ColoredGraph& g, std::string name = {});
  bool operator==(const TwoRelationStructure&) const = default;
};

struct TwoRelationClass {
  std::string name;
  std::vector<TwoRelationStructure> forbidden;
};

/// Injective map preserving E, N and their absence.
bool embeds(const TwoRelationStructure& h, const TwoRelationStructure& s);
bool is_member(const TwoRelationStructure& s, const TwoRelationClass& cls);
bool is_homomorphism(const TwoRelationStructure& a, const TwoRelationStructure& b,
                     const std::vector<VertexId>& map);
std::optional<std::vector<VertexId>> find_homomorphism(const TwoRelationStructure& a,
                                                       const TwoRelationStructure& b);

/// Each forbidden graph (non-induced patterns are expanded first) gets N on
/// its non-adjacent pairs; the 2-point structures with both relations and
/// with neither are added.
TwoRelationClass edge_nonedge_transform(const HereditaryClass& cls_red);

std::string format_two_relation(const TwoRelationStructure& s);
TwoRelationStructure parse_two_relation(const std::string& text);

}  // namespace jep
