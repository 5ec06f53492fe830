#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "jep/graph.hpp"
#include "jep/pattern.hpp"

namespace jep {

struct HomOptions {
  bool surjective = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::uint64_t budget = kDefaultBudget;
  ColorMatch colors = ColorMatch::kContain;
};

/// Vertex maps h -> g sending edges to edges and respecting colors (not
/// necessarily injective). With `surjective`, only maps onto all of g.
/// Sorted lexicographically unless `limit` truncates the enumeration.
std::vector<Embedding> homomorphisms(const ColoredGraph& h, const ColoredGraph& g,
                                     const HomOptions& opts = {});

std::optional<Embedding> find_homomorphism(const ColoredGraph& h, const ColoredGraph& g,
                                           const HomOptions& opts = {});

bool is_homomorphism(const ColoredGraph& h, const ColoredGraph& g, const Embedding& map);

/// Injective and preserves both edges and non-edges.
bool is_induced_embedding(const ColoredGraph& h, const ColoredGraph& g, const Embedding& map);

}  // namespace jep
