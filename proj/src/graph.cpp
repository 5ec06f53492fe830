#include "jep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stack>

namespace jep {

std::vector<ColorId> ColorSet::ids() const {
  std::vector<ColorId> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctz(b));
  return out;
}

ColoredGraph::ColoredGraph(std::size_t n, int palette_size)
    : palette_(palette_size), colors_(n), adj_(n) {}

VertexId ColoredGraph::add_vertex(ColorSet colors) {
  colors_.push_back(colors);
  adj_.emplace_back();
  return static_cast<VertexId>(adj_.size() - 1);
}

bool ColoredGraph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

bool ColoredGraph::remove_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edge_count_;
  return true;
}

bool ColoredGraph::adjacent(VertexId u, VertexId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  VertexId target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adj_.size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Composite disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  return free_join(a, b, {});
}

Composite free_join(const ColoredGraph& a, const ColoredGraph& b,
                    std::span<const std::pair<VertexId, VertexId>> identify) {
  constexpr VertexId kNone = ~VertexId{0};
  std::vector<VertexId> b_target(b.size(), kNone);
  std::vector<bool> a_used(a.size(), false);
  for (auto [u, v] : identify) {
    if (u >= a.size() || v >= b.size())
      throw std::invalid_argument("free_join: identification vertex out of range");
    if (a_used[u] || b_target[v] != kNone)
      throw std::invalid_argument("free_join: a vertex is identified twice on one side");
    a_used[u] = true;
    b_target[v] = u;
  }

  Composite out;
  out.graph = ColoredGraph(0, std::max(a.palette_size(), b.palette_size()));
  for (VertexId u = 0; u < a.size(); ++u) out.left.push_back(out.graph.add_vertex(a.colors(u)));
  for (VertexId v = 0; v < b.size(); ++v) {
    if (b_target[v] != kNone) {
      VertexId w = out.left[b_target[v]];
      out.graph.set_colors(w, out.graph.colors(w) | b.colors(v));
      out.right.push_back(w);
    } else {
      out.right.push_back(out.graph.add_vertex(b.colors(v)));
    }
  }
  for (const Edge& e : a.edges()) out.graph.add_edge(out.left[e.first], out.left[e.second]);
  for (const Edge& e : b.edges()) {
    VertexId x = out.right[e.first], y = out.right[e.second];
    if (x == y) throw std::invalid_argument("free_join: identification collapses an edge");
    out.graph.add_edge(x, y);
  }
  return out;
}

Subgraph induced_subgraph(const ColoredGraph& g, std::span<const VertexId> keep) {
  constexpr VertexId kNone = ~VertexId{0};
  std::vector<VertexId> index(g.size(), kNone);
  Subgraph out;
  out.graph = ColoredGraph(0, g.palette_size());
  for (VertexId v : keep) {
    if (v >= g.size()) throw std::out_of_range("induced_subgraph: vertex out of range");
    if (index[v] != kNone) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    index[v] = out.graph.add_vertex(g.colors(v));
    out.to_parent.push_back(v);
  }
  for (VertexId v : keep)
    for (VertexId w : g.neighbors(v))
      if (index[w] != kNone && v < w) out.graph.add_edge(index[v], index[w]);
  return out;
}

Subgraph remove_vertices(const ColoredGraph& g, std::span<const VertexId> drop) {
  std::vector<bool> gone(g.size(), false);
  for (VertexId v : drop) gone.at(v) = true;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<VertexId>> blocks(const ColoredGraph& g) {
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<VertexId>> out;
  std::uint32_t timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        VertexId w = nb[f.next++];
        if (disc[w] == kUnseen) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      VertexId p = done.parent;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        std::vector<VertexId> block;
        Edge stop(p, done.v);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == stop) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const ColoredGraph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const ColoredGraph& g) { return connected_components(g).size() <= 1; }

bool is_biconnected(const ColoredGraph& g) {
  if (g.size() < 2) return false;
  auto b = blocks(g);
  return b.size() == 1 && b.front().size() == g.size();
}

ColoredGraph complete_graph(std::size_t n) {
  ColoredGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

ColoredGraph cycle_graph(std::size_t n) {
  ColoredGraph g(n);
  for (VertexId u = 0; u < n; ++u) g.add_edge(u, static_cast<VertexId>((u + 1) % n));
  return g;
}

ColoredGraph path_graph(std::size_t n) {
  ColoredGraph g(n);
  for (VertexId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

}  // namespace jep
