#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jep {

using VertexId = std::uint32_t;
using ColorId = int;

inline constexpr int kMaxColors = 31;

/// Set of color ids (unary predicates) carried by a vertex. Ids are 1..31.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<ColorId> ids) {
    for (ColorId c : ids) insert(c);
  }
  static constexpr ColorSet from_bits(std::uint32_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr void insert(ColorId c) { bits_ |= bit(c); }
  constexpr void erase(ColorId c) { bits_ &= ~bit(c); }
  constexpr bool contains(ColorId c) const { return (bits_ & bit(c)) != 0; }
  /// True iff every color of `other` is also in this set.
  constexpr bool includes(ColorSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(ColorSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  /// Smallest color id, or 0 when empty.
  ColorId first() const { return bits_ == 0 ? 0 : __builtin_ctz(bits_); }
  std::vector<ColorId> ids() const;

  constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr bool operator==(const ColorSet&) const = default;
  constexpr auto operator<=>(const ColorSet&) const = default;

 private:
  static constexpr std::uint32_t bit(ColorId c) {
    if (c < 1 || c > kMaxColors) throw std::out_of_range("color id out of range");
    return std::uint32_t{1} << c;
  }
  std::uint32_t bits_ = 0;
};

/// Unordered vertex pair, stored with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : first(u < v ? u : v), second(u < v ? v : u) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph whose vertices carry color sets. Vertex ids are dense
/// (0..size()-1); adjacency lists are kept sorted.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t n, int palette_size = 0);

  VertexId add_vertex(ColorSet colors = {});
  /// Adds {u,v}. Returns false if already present; throws on loops or bad ids.
  bool add_edge(VertexId u, VertexId v);
  bool remove_edge(VertexId u, VertexId v);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

  ColorSet colors(VertexId v) const { return colors_.at(v); }
  void set_colors(VertexId v, ColorSet c) { colors_.at(v) = c; }
  void add_color(VertexId v, ColorId c) { colors_.at(v).insert(c); }

  int palette_size() const { return palette_; }
  void set_palette_size(int k) { palette_ = k; }

  /// All edges in increasing order.
  std::vector<Edge> edges() const;

  bool operator==(const ColoredGraph& o) const {
    return colors_ == o.colors_ && adj_ == o.adj_;
  }

 private:
  void check(VertexId v) const {
    if (v >= adj_.size()) throw std::out_of_range("vertex id out of range");
  }

  int palette_ = 0;
  std::vector<ColorSet> colors_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph together with the maps from each input's vertices into it.
struct Composite {
  ColoredGraph graph;
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

Composite disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

/// Disjoint union of a and b, then identification of each pair (a-vertex,
/// b-vertex). Identified vertices keep the a-side id and merge colors.
/// Throws std::invalid_argument if a vertex appears in two pairs on one side.
Composite free_join(const ColoredGraph& a, const ColoredGraph& b,
                    std::span<const std::pair<VertexId, VertexId>> identify);

struct Subgraph {
  ColoredGraph graph;
  std::vector<VertexId> to_parent;  // new id -> parent id
};

/// Induced subgraph on `keep` (order preserved, duplicates rejected).
Subgraph induced_subgraph(const ColoredGraph& g, std::span<const VertexId> keep);

/// Induced subgraph on everything except `drop`.
Subgraph remove_vertices(const ColoredGraph& g, std::span<const VertexId> drop);

/// Block decomposition: maximal 2-connected pieces, bridges as 2-vertex blocks
/// and isolated vertices as singletons. Each block is sorted; the list is
/// sorted lexicographically.
std::vector<std::vector<VertexId>> blocks(const ColoredGraph& g);

std::vector<std::vector<VertexId>> connected_components(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

/// True iff g has at least 3 vertices, is connected and has no cut vertex,
/// or is K2.
bool is_biconnected(const ColoredGraph& g);

/// Uncolored helpers used across the project.
ColoredGraph complete_graph(std::size_t n);
ColoredGraph cycle_graph(std::size_t n);
ColoredGraph path_graph(std::size_t n);

}  // namespace jep
