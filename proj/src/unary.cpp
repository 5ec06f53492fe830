#include "jep/unary.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace jep {

namespace {

bool has(const ColoredGraph& g, VertexId v, ColorId c) { return g.colors(v).contains(c); }
bool in_P(const ColoredGraph& g, VertexId v, int i) { return g.colors(v).intersects(color::P(i)); }

template <class Set>
std::vector<VertexId> seconds_of(const Set& s, VertexId first) {
  std::vector<VertexId> out;
  for (auto it = s.lower_bound({first, 0}); it != s.end() && it->first == first; ++it)
    out.push_back(it->second);
  return out;
}

constexpr std::size_t kChainCap = 64;

}  // namespace

std::vector<VertexId> DerivedRelations::successors(int i, VertexId x) const {
  return seconds_of(arrow[i], x);
}

std::vector<VertexId> DerivedRelations::predecessors(int i, VertexId y) const {
  std::vector<VertexId> out;
  for (auto [p, q] : arrow[i])
    if (q == y) out.push_back(p);
  return out;
}

std::vector<VertexId> DerivedRelations::x_projections(int i, VertexId g) const {
  return seconds_of(proj_x[i], g);
}

std::vector<VertexId> DerivedRelations::y_projections(int i, VertexId g) const {
  return seconds_of(proj_y[i], g);
}

std::vector<VertexId> DerivedRelations::tiles(VertexId h, int type) const {
  std::vector<VertexId> out;
  for (auto it = tau_i.lower_bound({h, 0, 0}); it != tau_i.end() && std::get<0>(*it) == h; ++it)
    if (std::get<2>(*it) == type) out.push_back(std::get<1>(*it));
  return out;
}

bool DerivedRelations::full_tile_set(VertexId h) const {
  // a walk of length t from h passes tiles of every type
  return !tiles(h, tile_count).empty();
}

DerivedRelations derive_relations(const ColoredGraph& g, int tile_count) {
  DerivedRelations r;
  r.tile_count = tile_count;
  const VertexId n = static_cast<VertexId>(g.size());
  for (int i = 0; i < 2; ++i) {
    for (VertexId x = 0; x < n; ++x) {
      if (in_P(g, x, i))
        for (VertexId a : g.neighbors(x)) {
          if (!has(g, a, color::kC1)) continue;
          for (VertexId b : g.neighbors(a)) {
            if (!has(g, b, color::kC2)) continue;
            for (VertexId y : g.neighbors(b))
              if (in_P(g, y, i)) r.arrow[i].emplace(x, y);
          }
        }
      if (has(g, x, color::G(i)))
        for (VertexId a : g.neighbors(x)) {
          bool c3 = has(g, a, color::kC3), c4 = has(g, a, color::kC4);
          if (!c3 && !c4) continue;
          for (VertexId w : g.neighbors(a)) {
            if (!in_P(g, w, i)) continue;
            if (c3) r.proj_x[i].emplace(x, w);
            if (c4) r.proj_y[i].emplace(x, w);
          }
        }
    }
  }

  std::vector<bool> associated(n, false);
  for (VertexId h = 0; h < n; ++h) {
    if (!has(g, h, color::kG1)) continue;
    std::vector<bool> in_layer(n, false);
    std::vector<VertexId> layer;
    for (VertexId v : g.neighbors(h))
      if (has(g, v, color::kT1)) layer.push_back(v);
    for (int k = 1; k <= tile_count && !layer.empty(); ++k) {
      for (VertexId t : layer) {
        r.tau_i.emplace(h, t, k);
        associated[t] = true;
      }
      std::vector<bool> seen(n, false);
      std::vector<VertexId> next;
      for (VertexId t : layer)
        for (VertexId v : g.neighbors(t))
          if (!seen[v] && has(g, v, color::kT1)) {
            seen[v] = true;
            next.push_back(v);
          }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }

    auto& chains = r.tile_chains[h];
    std::vector<VertexId> path{h};
    std::vector<bool> on_path(n, false);
    on_path[h] = true;
    std::function<void()> extend = [&] {
      if (chains.size() >= kChainCap) return;
      if (static_cast<int>(path.size()) == tile_count + 1) {
        chains.push_back(path);
        return;
      }
      for (VertexId v : g.neighbors(path.back())) {
        if (on_path[v] || !has(g, v, color::kT1)) continue;
        on_path[v] = true;
        path.push_back(v);
        extend();
        path.pop_back();
        on_path[v] = false;
      }
    };
    extend();
    if (chains.empty()) r.tile_chains.erase(h);
  }

  for (VertexId x = 0; x < n; ++x) {
    if (!has(g, x, color::kG0)) continue;
    for (VertexId t : g.neighbors(x))
      if (associated[t]) r.tau.emplace(x, t);
  }
  return r;
}

namespace {

ColoredGraph canonical_model(int n, int side, int tiles) {
  if (n < 1) throw std::invalid_argument("depth must be positive");
  CanonicalLayout L{n, tiles};
  ColoredGraph g(L.size(), kUnaryPalette.size);
  for (int i = 0; i < n; ++i) g.add_color(L.path(i), i == 0 ? color::O(side) : color::Pp(side));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g.add_color(L.grid(i, j), color::G(side));
  VertexId next = static_cast<VertexId>(n + n * n);
  for (int i = 0; i + 1 < n; ++i) {
    VertexId a = next++, b = next++;
    g.add_color(a, color::kC1);
    g.add_color(b, color::kC2);
    g.add_edge(L.path(i), a);
    g.add_edge(a, b);
    g.add_edge(b, L.path(i + 1));
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      VertexId c = next++, d = next++;
      g.add_color(c, color::kC3);
      g.add_color(d, color::kC4);
      g.add_edge(L.grid(i, j), c);
      g.add_edge(c, L.path(i));
      g.add_edge(L.grid(i, j), d);
      g.add_edge(d, L.path(j));
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      VertexId prev = L.grid(i, j);
      for (int k = 1; k <= tiles; ++k) {
        VertexId t = L.tile(i, j, k);
        g.add_color(t, color::kT1);
        g.add_edge(prev, t);
        prev = t;
      }
    }
  return g;
}

}  // namespace

ColoredGraph canonical_A(int n, const TilingProblem& t) {
  validate(t);
  return canonical_model(n, 0, 0);
}

ColoredGraph canonical_B(int n, const TilingProblem& t) {
  validate(t);
  return canonical_model(n, 1, t.tile_count);
}

Coordinates coordinates(const ColoredGraph& g) {
  const VertexId size = static_cast<VertexId>(g.size());
  DerivedRelations rel = derive_relations(g, 1);
  Coordinates out;
  for (int i = 0; i < 2; ++i) {
    int path_count = 0;
    for (VertexId v = 0; v < size; ++v) path_count += in_P(g, v, i);
    // (origin, distance) pairs per path vertex; distances past the number of
    // path vertices can only come from cycles and are not needed to detect
    // ambiguity
    std::vector<std::set<std::pair<VertexId, int>>> dist(size);
    for (VertexId o = 0; o < size; ++o) {
      if (!has(g, o, color::O(i))) continue;
      std::set<VertexId> frontier{o};
      for (int d = 0; d <= path_count && !frontier.empty(); ++d) {
        std::set<VertexId> next;
        for (VertexId p : frontier) {
          dist[p].emplace(o, d);
          for (VertexId q : rel.successors(i, p)) next.insert(q);
        }
        frontier = std::move(next);
      }
    }
    for (VertexId v = 0; v < size; ++v) {
      if (!has(g, v, color::G(i))) continue;
      std::set<std::pair<int, int>> found;
      for (VertexId x : rel.x_projections(i, v))
        for (auto [ox, n] : dist[x])
          for (VertexId y : rel.y_projections(i, v))
            for (auto [oy, m] : dist[y])
              if (ox == oy) found.emplace(n, m);
      if (found.empty()) continue;
      if (found.size() > 1)
        throw AmbiguityError("grid vertex " + std::to_string(v) + " has several coordinates");
      auto [it, fresh] = out.emplace(v, *found.begin());
      if (!fresh && it->second != *found.begin())
        throw AmbiguityError("grid vertex " + std::to_string(v) + " has several coordinates");
    }
  }
  return out;
}

ColoredGraph joint_embed_unary(const ColoredGraph& a, const ColoredGraph& b, const TilingMap& theta,
                               const TilingProblem& t, const JointEmbedOptions& opts) {
  validate(t);
  if (opts.check_inputs) {
    auto cls = compile_unary_class(t);
    CheckOptions co;
    co.budget = opts.budget;
    co.first_only = true;
    for (const ColoredGraph* f : {&a, &b}) {
      auto r = check_constraints(*f, cls, co);
      if (r.verdict == Verdict::kIndeterminate)
        throw BudgetExceeded("input membership undecided within budget");
      if (r.verdict == Verdict::kFail)
        throw std::invalid_argument("input outside the class: " +
                                    format_violation(r.violations.front(), cls.palette, *f));
    }
  }
  auto u = disjoint_union(a, b);
  ColoredGraph out = u.graph;
  struct Factor {
    const ColoredGraph* g;
    Coordinates coords;
    DerivedRelations rel;
    const std::vector<VertexId>* to_union;
  };
  Factor fa{&a, coordinates(a), derive_relations(a, t.tile_count), &u.left};
  Factor fb{&b, coordinates(b), derive_relations(b, t.tile_count), &u.right};

  auto tile_from = [&](const Factor& gf, const Factor& hf) {
    for (auto [g, nm] : gf.coords) {
      if (!has(*gf.g, g, color::kG0)) continue;
      for (auto [h, hm] : hf.coords) {
        if (hm != nm || !has(*hf.g, h, color::kG1)) continue;
        Tile k = theta.at(nm.first, nm.second);
        if (k < 1 || k > t.tile_count)
          throw std::invalid_argument("theta undefined at (" + std::to_string(nm.first) + "," +
                                      std::to_string(nm.second) + ")");
        for (VertexId tile : hf.rel.tiles(h, k))
          out.add_edge((*gf.to_union)[g], (*hf.to_union)[tile]);
      }
    }
  };
  tile_from(fa, fb);
  tile_from(fb, fa);
  return out;
}

std::vector<VertexId> spine(const DerivedRelations& rel, const ColoredGraph& g, int i, int n) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (has(g, v, color::O(i))) {
      out.push_back(v);
      break;
    }
  while (!out.empty() && static_cast<int>(out.size()) < n) {
    auto succ = rel.successors(i, out.back());
    auto it = std::find_if(succ.begin(), succ.end(), [&](VertexId s) {
      return std::find(out.begin(), out.end(), s) == out.end();
    });
    if (it == succ.end()) break;
    out.push_back(*it);
  }
  return out;
}

TilingMap extract_tiling(const ColoredGraph& c, int n, int tile_count) {
  if (n < 1) throw std::invalid_argument("depth must be positive");
  DerivedRelations rel = derive_relations(c, tile_count);
  TilingMap out = TilingMap::patch(n, n);
  std::array<std::vector<VertexId>, 2> sp{spine(rel, c, 0, n), spine(rel, c, 1, n)};

  // cell of a grid vertex w.r.t. the designated path; (-1,-1) when off it
  auto cells_of = [&](int i, VertexId g) {
    std::vector<std::pair<int, int>> cells;
    auto pos = [&](VertexId p) {
      auto it = std::find(sp[i].begin(), sp[i].end(), p);
      return it == sp[i].end() ? -1 : static_cast<int>(it - sp[i].begin());
    };
    for (VertexId x : rel.x_projections(i, g))
      for (VertexId y : rel.y_projections(i, g))
        if (pos(x) >= 0 && pos(y) >= 0) cells.emplace_back(pos(x), pos(y));
    return cells;
  };

  std::map<VertexId, std::vector<std::pair<VertexId, int>>> owners;  // tile -> (h, type)
  for (auto [h, t, k] : rel.tau_i) owners[t].emplace_back(h, k);

  for (VertexId g = 0; g < c.size(); ++g) {
    if (!has(c, g, color::kG0)) continue;
    auto gcells = cells_of(0, g);
    if (gcells.empty()) continue;
    for (VertexId t : c.neighbors(g)) {
      auto it = owners.find(t);
      if (it == owners.end()) continue;
      for (auto [h, k] : it->second) {
        auto hcells = cells_of(1, h);
        for (auto cell : gcells) {
          if (std::find(hcells.begin(), hcells.end(), cell) == hcells.end()) continue;
          Tile cur = out.at(cell.first, cell.second);
          if (cur == 0 || k < cur) out.set(cell.first, cell.second, k);
        }
      }
    }
  }
  return out;
}

}  // namespace jep
