// Constraints (1)-(9) of the unary-language class, as patterns and as rules
// over the derived relations.

#include <algorithm>
#include <optional>

#include "jep/unary.hpp"

namespace jep {

namespace {

constexpr int kX = 0, kY = 1;

// Pattern under construction. Vertices added with path() stand for P^i and
// are expanded into their O^i and P'^i variants on emit().
class Builder {
 public:
  Builder(std::string name, int palette) : name_(std::move(name)) {
    p_.graph.set_palette_size(palette);
    p_.injective = false;
  }

  VertexId add(ColorSet c) { return p_.graph.add_vertex(c); }
  VertexId add(ColorId c) { return add(ColorSet{c}); }
  VertexId path(int i) {
    VertexId v = add(color::Pp(i));
    pvars_.emplace_back(v, i);
    return v;
  }
  void edge(VertexId u, VertexId v) { p_.graph.add_edge(u, v); }
  void forbid(VertexId u, VertexId v) { p_.forbidden.emplace_back(u, v); }
  void distinct(VertexId u, VertexId v) { p_.distinct.emplace_back(u, v); }

  void arrow(VertexId x, VertexId y) {
    VertexId a = add(color::kC1), b = add(color::kC2);
    edge(x, a);
    edge(a, b);
    edge(b, y);
  }
  void proj(VertexId g, VertexId w, int axis) {
    VertexId c = add(axis == kX ? color::kC3 : color::kC4);
    edge(g, c);
    edge(c, w);
  }
  /// h E v1 E ... E v_len in T1; returns v1..v_len. With `end` set, v_len
  /// is that vertex.
  std::vector<VertexId> chain(VertexId h, int len, std::optional<VertexId> end = std::nullopt) {
    std::vector<VertexId> out;
    VertexId prev = h;
    for (int k = 1; k <= len; ++k) {
      VertexId v = (k == len && end) ? *end : add(color::kT1);
      edge(prev, v);
      out.push_back(v);
      prev = v;
    }
    return out;
  }
  /// Grid vertices g, g2 of superscript i with g2 a horizontal (vertical)
  /// successor of g, with their projections.
  std::pair<VertexId, VertexId> successor_pair(int i, bool horizontal) {
    VertexId g = add(color::G(i)), g2 = add(color::G(i));
    VertexId p = path(i), p2 = path(i), shared = path(i);
    arrow(p, p2);
    int step = horizontal ? kX : kY, fixed = horizontal ? kY : kX;
    proj(g, p, step);
    proj(g2, p2, step);
    proj(g, shared, fixed);
    proj(g2, shared, fixed);
    return {g, g2};
  }
  VertexId grid_origin(int i) {
    VertexId o = add(color::O(i)), g = add(color::G(i));
    proj(g, o, kX);
    proj(g, o, kY);
    return g;
  }

  void emit(std::vector<ClassPattern>& out, const std::string& constraint) const {
    const std::size_t m = pvars_.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      ConstraintPattern q = p_;
      std::string tag;
      for (std::size_t b = 0; b < m; ++b) {
        auto [v, i] = pvars_[b];
        bool origin = (mask >> b) & 1u;
        q.graph.set_colors(v, ColorSet{origin ? color::O(i) : color::Pp(i)});
        tag += origin ? 'O' : 'P';
      }
      q.name = m == 0 ? name_ : name_ + "." + tag;
      out.push_back({constraint, std::move(q)});
    }
  }

 private:
  std::string name_;
  ConstraintPattern p_;
  std::vector<std::pair<VertexId, int>> pvars_;
};

const char* orient_name(bool horizontal) { return horizontal ? "h" : "v"; }

// ---- semantic side -------------------------------------------------------

bool has(const ColoredGraph& g, VertexId v, ColorId c) { return g.colors(v).contains(c); }

std::vector<VertexPair> grid_successors(const DerivedRelations& r, int i, bool horizontal) {
  const auto& step = horizontal ? r.proj_x[i] : r.proj_y[i];
  const auto& fixed = horizontal ? r.proj_y[i] : r.proj_x[i];
  std::set<VertexId> grids;
  for (auto [g, w] : step) grids.insert(g);
  std::vector<VertexPair> out;
  for (VertexId g : grids)
    for (VertexId g2 : grids) {
      bool shared = false;
      for (auto it = fixed.lower_bound({g, 0}); it != fixed.end() && it->first == g && !shared; ++it)
        shared = fixed.count({g2, it->second}) > 0;
      if (!shared) continue;
      bool advances = false;
      for (auto it = step.lower_bound({g, 0}); it != step.end() && it->first == g && !advances; ++it)
        for (auto jt = step.lower_bound({g2, 0}); jt != step.end() && jt->first == g2; ++jt)
          if (r.arrow[i].count({it->second, jt->second})) {
            advances = true;
            break;
          }
      if (advances) out.emplace_back(g, g2);
    }
  return out;
}

std::vector<VertexId> grid_origins(const ColoredGraph& g, const DerivedRelations& r, int i) {
  std::vector<VertexId> out;
  std::set<VertexId> seen;
  for (auto [v, w] : r.proj_x[i])
    if (has(g, w, color::O(i)) && r.proj_y[i].count({v, w}) && seen.insert(v).second)
      out.push_back(v);
  return out;
}

/// A walk h E t1 E ... E t_len inside T1 avoiding N(avoid_nbrs_of).
std::optional<std::vector<VertexId>> walk_avoiding(const ColoredGraph& g, VertexId h, int len,
                                                   VertexId avoid_nbrs_of) {
  const std::size_t n = g.size();
  auto allowed = [&](VertexId v) { return has(g, v, color::kT1) && !g.adjacent(avoid_nbrs_of, v); };
  // parent[k][v]: predecessor of v at step k
  std::vector<std::vector<std::int64_t>> parent(len + 1, std::vector<std::int64_t>(n, -1));
  std::vector<VertexId> layer{h};
  for (int k = 1; k <= len; ++k) {
    std::vector<VertexId> next;
    for (VertexId u : layer)
      for (VertexId v : g.neighbors(u))
        if (parent[k][v] < 0 && allowed(v)) {
          parent[k][v] = u;
          next.push_back(v);
        }
    if (next.empty()) return std::nullopt;
    layer = std::move(next);
  }
  std::vector<VertexId> walk(len + 1);
  walk[len] = layer.front();
  for (int k = len; k >= 1; --k) walk[k - 1] = static_cast<VertexId>(parent[k][walk[k]]);
  return walk;
}

/// A tile adjacent to g that is associated to h with one of `types`.
std::optional<VertexId> tile_on(const ColoredGraph& g, const DerivedRelations& r, VertexId grid,
                                VertexId h, int type_lo, int type_hi) {
  for (int k = type_lo; k <= type_hi; ++k)
    for (VertexId t : r.tiles(h, k))
      if (g.adjacent(grid, t)) return t;
  return std::nullopt;
}

using Finder = std::function<std::vector<Violation>(const ColoredGraph&, const DerivedRelations&,
                                                    std::size_t)>;

SemanticRule make_rule(const std::string& constraint, const std::string& name, int tile_count,
                       Finder f) {
  SemanticRule r;
  r.name = name;
  r.constraint = constraint;
  r.cross_check = true;
  r.manifest = "unary " + constraint;
  r.find = [f = std::move(f), tile_count](const ColoredGraph& g, std::size_t limit, std::uint64_t) {
    return f(g, derive_relations(g, tile_count), limit);
  };
  return r;
}

}  // namespace

HereditaryClass compile_unary_class(const TilingProblem& t, const Palette& palette) {
  validate(t);
  const int T = t.tile_count;
  HereditaryClass cls;
  cls.name = "unary";
  cls.palette = palette;
  auto& out = cls.patterns;

  // (1)
  for (ColorId c = 1; c <= palette.size; ++c)
    for (ColorId d = c + 1; d <= palette.size; ++d) {
      ConstraintPattern p;
      p.name = "c1." + palette.name(c) + "+" + palette.name(d);
      p.graph = ColoredGraph(0, palette.size);
      p.graph.add_vertex(ColorSet{c, d});
      out.push_back({"c1", std::move(p)});
    }

  for (int i = 0; i < 2; ++i) {
    // (2)
    Builder b2("c2.two-predecessors." + std::to_string(i), palette.size);
    VertexId p = b2.path(i), p2 = b2.path(i), q = b2.path(i);
    b2.arrow(p, q);
    b2.arrow(p2, q);
    b2.distinct(p, p2);
    b2.emit(out, "c2");
  }
  for (int i = 0; i < 2; ++i) {
    // (3)
    Builder b3("c3.origin-predecessor." + std::to_string(i), palette.size);
    VertexId p = b3.path(i), o = b3.add(color::O(i));
    b3.arrow(p, o);
    b3.emit(out, "c3");
  }
  for (int i = 0; i < 2; ++i)
    for (int axis : {kX, kY}) {
      // (4)
      Builder b4(std::string("c4.two-") + (axis == kX ? "x" : "y") + "-projections." +
                     std::to_string(i),
                 palette.size);
      VertexId g = b4.add(color::G(i)), w = b4.path(i), w2 = b4.path(i);
      b4.proj(g, w, axis);
      b4.proj(g, w2, axis);
      b4.distinct(w, w2);
      b4.emit(out, "c4");
    }
  for (int i = 1; i <= T; ++i)
    for (int j = i; j <= T; ++j) {
      // (5)
      Builder b5("c5.two-grids." + std::to_string(i) + "-" + std::to_string(j), palette.size);
      VertexId g = b5.add(color::kG1), h = b5.add(color::kG1);
      VertexId tile = b5.chain(g, i).back();
      b5.chain(h, j, tile);
      b5.distinct(g, h);
      b5.emit(out, "c5");
    }
  for (int i = 1; i <= T; ++i)
    for (int j = i + 1; j <= T; ++j) {
      // (6)
      Builder b6("c6.two-types." + std::to_string(i) + "-" + std::to_string(j), palette.size);
      VertexId g = b6.add(color::kG1);
      VertexId tile = b6.chain(g, i).back();
      b6.chain(g, j, tile);
      b6.emit(out, "c6");
    }

  // (7): (lower/left type, upper/right type, horizontal)
  std::vector<std::tuple<Tile, Tile, bool>> rules;
  for (auto [l, k] : t.h_forbidden) rules.emplace_back(l, k, true);
  for (auto [j, i] : t.v_forbidden) rules.emplace_back(j, i, false);
  for (auto [first, second, horizontal] : rules) {
    Builder b7(std::string("c7.") + orient_name(horizontal) + "not." + std::to_string(first) + "-" +
                   std::to_string(second),
               palette.size);
    auto [g, g2] = b7.successor_pair(0, horizontal);
    auto [h, h2] = b7.successor_pair(1, horizontal);
    b7.edge(g, b7.chain(h, first).back());
    b7.edge(g2, b7.chain(h2, second).back());
    b7.emit(out, "c7");
  }

  {
    // (8)
    Builder b8("c8.origin-untiled", palette.size);
    VertexId g = b8.grid_origin(0), h = b8.grid_origin(1);
    for (VertexId tk : b8.chain(h, T)) b8.forbid(g, tk);
    b8.emit(out, "c8");
  }

  for (bool horizontal : {true, false})
    for (int i = 1; i <= T; ++i) {
      // (9)
      Builder b9(std::string("c9.") + orient_name(horizontal) + ".from-type-" + std::to_string(i),
                 palette.size);
      auto [g, g2] = b9.successor_pair(0, horizontal);
      auto [h, h2] = b9.successor_pair(1, horizontal);
      b9.edge(g, b9.chain(h, i).back());
      for (VertexId tk : b9.chain(h2, T)) b9.forbid(g2, tk);
      b9.emit(out, "c9");
    }

  // ---- the same constraints over derived relations ----
  auto& rs = cls.rules;
  const int k = palette.size;
  rs.push_back(make_rule("c1", "c1.semantic", T,
                         [k](const ColoredGraph& g, const DerivedRelations&, std::size_t limit) {
                           std::vector<Violation> v;
                           for (VertexId x = 0; x < g.size() && v.size() < limit; ++x) {
                             int count = 0;
                             for (ColorId c : g.colors(x).ids()) count += c <= k;
                             if (count >= 2) v.push_back({"c1", "c1.semantic", {x}, "two colors"});
                           }
                           return v;
                         }));
  rs.push_back(make_rule("c2", "c2.semantic", T,
                         [](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           for (int i = 0; i < 2; ++i)
                             for (VertexId q = 0; q < g.size() && v.size() < limit; ++q) {
                               auto pre = r.predecessors(i, q);
                               if (pre.size() >= 2)
                                 v.push_back({"c2", "c2.semantic", {pre[0], pre[1], q},
                                              "two predecessors"});
                             }
                           return v;
                         }));
  rs.push_back(make_rule("c3", "c3.semantic", T,
                         [](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           for (int i = 0; i < 2; ++i)
                             for (VertexId o = 0; o < g.size() && v.size() < limit; ++o) {
                               if (!has(g, o, color::O(i))) continue;
                               auto pre = r.predecessors(i, o);
                               if (!pre.empty())
                                 v.push_back({"c3", "c3.semantic", {pre[0], o},
                                              "origin with a predecessor"});
                             }
                           return v;
                         }));
  rs.push_back(make_rule("c4", "c4.semantic", T,
                         [](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           for (int i = 0; i < 2; ++i)
                             for (VertexId x = 0; x < g.size() && v.size() < limit; ++x)
                               for (bool horizontal : {true, false}) {
                                 auto ps = horizontal ? r.x_projections(i, x) : r.y_projections(i, x);
                                 if (ps.size() >= 2 && v.size() < limit)
                                   v.push_back({"c4", "c4.semantic", {x, ps[0], ps[1]},
                                                horizontal ? "two x-projections" : "two y-projections"});
                               }
                           return v;
                         }));
  rs.push_back(make_rule("c5", "c5.semantic", T,
                         [](const ColoredGraph&, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           std::map<VertexId, std::set<VertexId>> owners;
                           for (auto [h, t, k] : r.tau_i) owners[t].insert(h);
                           for (const auto& [t, hs] : owners) {
                             if (v.size() >= limit) break;
                             if (hs.size() >= 2)
                               v.push_back({"c5", "c5.semantic", {*hs.begin(), *std::next(hs.begin()), t},
                                            "tile associated to two grid vertices"});
                           }
                           return v;
                         }));
  rs.push_back(make_rule("c6", "c6.semantic", T,
                         [](const ColoredGraph&, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           std::map<VertexPair, std::set<int>> types;
                           for (auto [h, t, k] : r.tau_i) types[{h, t}].insert(k);
                           for (const auto& [ht, ks] : types) {
                             if (v.size() >= limit) break;
                             if (ks.size() >= 2)
                               v.push_back({"c6", "c6.semantic", {ht.first, ht.second},
                                            "tile with two types"});
                           }
                           return v;
                         }));
  rs.push_back(make_rule(
      "c7", "c7.semantic", T,
      [rules](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
        std::vector<Violation> v;
        for (auto [first, second, horizontal] : rules) {
          auto gs = grid_successors(r, 0, horizontal);
          auto hs = grid_successors(r, 1, horizontal);
          for (auto [g0, g1] : gs)
            for (auto [h0, h1] : hs) {
              if (v.size() >= limit) return v;
              auto t0 = tile_on(g, r, g0, h0, first, first);
              if (!t0) continue;
              auto t1 = tile_on(g, r, g1, h1, second, second);
              if (!t1) continue;
              v.push_back({"c7", "c7.semantic", {g0, g1, h0, h1, *t0, *t1},
                           std::string(horizontal ? "horizontal" : "vertical") + " rule " +
                               std::to_string(first) + "," + std::to_string(second)});
            }
        }
        return v;
      }));
  rs.push_back(make_rule("c8", "c8.semantic", T,
                         [T](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           for (VertexId g0 : grid_origins(g, r, 0))
                             for (VertexId h : grid_origins(g, r, 1)) {
                               if (v.size() >= limit) return v;
                               if (auto walk = walk_avoiding(g, h, T, g0)) {
                                 std::vector<VertexId> w{g0};
                                 w.insert(w.end(), walk->begin(), walk->end());
                                 v.push_back({"c8", "c8.semantic", w, "origin not tiled"});
                               }
                             }
                           return v;
                         }));
  rs.push_back(make_rule("c9", "c9.semantic", T,
                         [T](const ColoredGraph& g, const DerivedRelations& r, std::size_t limit) {
                           std::vector<Violation> v;
                           for (bool horizontal : {true, false}) {
                             auto gs = grid_successors(r, 0, horizontal);
                             auto hs = grid_successors(r, 1, horizontal);
                             for (auto [g0, g1] : gs)
                               for (auto [h0, h1] : hs) {
                                 if (v.size() >= limit) return v;
                                 auto tile = tile_on(g, r, g0, h0, 1, T);
                                 if (!tile) continue;
                                 if (auto walk = walk_avoiding(g, h1, T, g1)) {
                                   std::vector<VertexId> w{g0, g1, h0, *tile};
                                   w.insert(w.end(), walk->begin(), walk->end());
                                   v.push_back({"c9", "c9.semantic", w,
                                                std::string(horizontal ? "horizontal" : "vertical") +
                                                    " successor not tiled"});
                                 }
                               }
                           }
                           return v;
                         }));
  return cls;
}

}  // namespace jep
