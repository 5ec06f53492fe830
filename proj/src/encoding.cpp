#include "jep/encoding.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace jep {

ColoredGraph wheel(std::size_t n) {
  if (n < 4) throw std::invalid_argument("wheel needs a rim of at least 4");
  ColoredGraph g(n + 1);
  for (VertexId i = 1; i <= n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n ? 1 : i + 1);
  }
  return g;
}

PointedWheel pointed_wheel(int index) {
  if (index < 1) throw std::invalid_argument("wheel index must be positive");
  return {index, wheel(EncodingScheme::rim_size(index)), 0};
}

ColorId EncodingScheme::color_of(std::size_t rim) const {
  if (rim < 7 || rim % 2 == 0) return 0;
  auto c = static_cast<ColorId>((rim - 5) / 2);
  return c <= k ? c : 0;
}

namespace {

ColorId single_color(ColorSet c, const EncodingScheme& s, const char* what) {
  if (c.size() != 1) throw std::invalid_argument(std::string(what) + ": vertex is not singly colored");
  ColorId id = c.first();
  if (id > s.k) throw std::invalid_argument(std::string(what) + ": color outside the scheme");
  return id;
}

// Adds a fresh rim around `hub`; returns rim ids in cycle order.
std::vector<VertexId> attach_wheel(ColoredGraph& g, VertexId hub, ColorId c) {
  std::size_t n = EncodingScheme::rim_size(c);
  std::vector<VertexId> rim;
  for (std::size_t i = 0; i < n; ++i) rim.push_back(g.add_vertex());
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(hub, rim[i]);
    g.add_edge(rim[i], rim[(i + 1) % n]);
  }
  return rim;
}

}  // namespace

ColoredGraph wedge(const ColoredGraph& g, const EncodingScheme& s) {
  ColoredGraph out(g.size());
  for (const Edge& e : g.edges()) out.add_edge(e.first, e.second);
  for (VertexId v = 0; v < g.size(); ++v) attach_wheel(out, v, single_color(g.colors(v), s, "wedge"));
  return out;
}

std::vector<WheelCopy> free_wheel_copies(const ColoredGraph& g, const EncodingScheme& s) {
  std::vector<WheelCopy> out;
  for (const auto& b : blocks(g)) {
    if (b.size() < 8) continue;
    std::size_t n = b.size() - 1;
    ColorId c = s.color_of(n);
    if (c == 0) continue;
    std::set<VertexId> in(b.begin(), b.end());
    auto inner = [&](VertexId v) {
      std::size_t d = 0;
      for (VertexId w : g.neighbors(v)) d += in.count(w);
      return d;
    };
    VertexId hub = 0;
    int hubs = 0;
    bool ok = true;
    for (VertexId v : b) {
      std::size_t d = inner(v);
      if (d == n) {
        hub = v;
        ++hubs;
      } else if (d != 3 || g.degree(v) != 3) {
        ok = false;
        break;
      }
    }
    if (!ok || hubs != 1) continue;
    // Rim must be one cycle.
    std::vector<VertexId> rim;
    VertexId start = b.front() == hub ? b[1] : b.front();
    VertexId prev = hub, cur = start;
    while (true) {
      rim.push_back(cur);
      VertexId next = hub;
      for (VertexId w : g.neighbors(cur))
        if (w != hub && w != prev) {
          next = w;
          break;
        }
      prev = cur;
      cur = next;
      if (cur == start || rim.size() > n) break;
    }
    if (cur != start || rim.size() != n) continue;
    out.push_back({hub, std::move(rim), c});
  }
  return out;
}

Subgraph vee_with_map(const ColoredGraph& g, const EncodingScheme& s) {
  std::map<VertexId, ColorSet> hubs;
  for (const auto& w : free_wheel_copies(g, s)) hubs[w.hub].insert(w.color);
  std::vector<VertexId> keep;
  for (auto& [h, c] : hubs) keep.push_back(h);
  auto sub = induced_subgraph(g, keep);
  for (VertexId i = 0; i < keep.size(); ++i) sub.graph.set_colors(i, hubs[keep[i]]);
  sub.graph.set_palette_size(s.k);
  return sub;
}

ColoredGraph vee(const ColoredGraph& g, const EncodingScheme& s) { return vee_with_map(g, s).graph; }

namespace {

void forbid_non_edges(ConstraintPattern& p, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!p.graph.adjacent(vs[i], vs[j])) p.forbidden.emplace_back(vs[i], vs[j]);
}

std::vector<VertexId> all_vertices(const ColoredGraph& g) {
  std::vector<VertexId> v(g.size());
  for (VertexId i = 0; i < g.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

std::vector<ConstraintPattern> h1_constraints(const EncodingScheme& s) {
  std::vector<ConstraintPattern> out;
  for (ColorId c = 1; c <= s.k; ++c) {
    ConstraintPattern p;
    std::size_t n = EncodingScheme::rim_size(c);
    p.name = "H1.W" + std::to_string(n);
    p.graph = wheel(n);
    forbid_non_edges(p, all_vertices(p.graph));
    VertexId x = p.graph.add_vertex();
    p.graph.add_edge(x, 1);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ConstraintPattern> h2_constraints(const EncodingScheme& s) {
  std::vector<ConstraintPattern> out;
  for (ColorId i = 1; i <= s.k; ++i)
    for (ColorId j = i; j <= s.k; ++j) {
      std::pair<VertexId, VertexId> hub{0, 0};
      auto joined = free_join(wheel(EncodingScheme::rim_size(i)), wheel(EncodingScheme::rim_size(j)),
                              std::span(&hub, 1));
      ConstraintPattern p;
      p.name = "H2.W" + std::to_string(EncodingScheme::rim_size(i)) + "+W" +
               std::to_string(EncodingScheme::rim_size(j));
      p.graph = std::move(joined.graph);
      forbid_non_edges(p, all_vertices(p.graph));
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<ConstraintPattern> guard_constraints(const EncodingScheme& s) {
  auto out = h1_constraints(s);
  for (auto& p : h2_constraints(s)) out.push_back(std::move(p));
  return out;
}

ConstraintPattern wedge_pattern(const ConstraintPattern& p, const EncodingScheme& s) {
  if (!p.injective) throw std::invalid_argument("wedge_pattern: pattern must be injective");
  ConstraintPattern out;
  out.name = "wedge." + p.name;
  out.graph = ColoredGraph(p.size());
  for (const Edge& e : p.graph.edges()) out.graph.add_edge(e.first, e.second);
  out.forbidden = p.forbidden;
  std::vector<std::vector<VertexId>> rims;
  for (VertexId v = 0; v < p.size(); ++v)
    rims.push_back(attach_wheel(out.graph, v, single_color(p.graph.colors(v), s, "wedge_pattern")));
  // Rim vertices see nothing outside their own wheel.
  for (VertexId v = 0; v < p.size(); ++v) {
    std::vector<VertexId> own = rims[v];
    own.push_back(v);
    forbid_non_edges(out, own);
    for (VertexId r : rims[v])
      for (VertexId w = 0; w < out.graph.size(); ++w)
        if (std::find(own.begin(), own.end(), w) == own.end() && (w < p.size() || w > r))
          out.forbidden.emplace_back(r, w);
  }
  std::sort(out.forbidden.begin(), out.forbidden.end());
  out.forbidden.erase(std::unique(out.forbidden.begin(), out.forbidden.end()), out.forbidden.end());
  return out;
}

namespace {

bool colored_in(const ColoredGraph& g, VertexId v, ColorId c) { return g.colors(v).contains(c); }

}  // namespace

HereditaryClass compile_colored_class(const TilingProblem& t, const Palette& palette) {
  auto cls = compile_unary_class(t, palette);
  cls.name = "colored";
  cls.palette = palette;
  auto s = EncodingScheme::for_palette(palette);

  const std::pair<ColorId, ColorId> grid_pairs[] = {
      {color::kG0, color::kG0}, {color::kG0, color::kG1}, {color::kG1, color::kG1}};
  for (auto [a, b] : grid_pairs) {
    ConstraintPattern p;
    p.name = "grid-edge." + palette.name(a) + "-" + palette.name(b);
    p.graph = ColoredGraph(2, palette.size);
    p.graph.set_colors(0, {a});
    p.graph.set_colors(1, {b});
    p.graph.add_edge(0, 1);
    cls.patterns.push_back({"grid-edge", std::move(p)});
  }
  for (ColorId c = 1; c <= s.k; ++c) {
    auto p = induced_pattern(wheel(EncodingScheme::rim_size(c)),
                             "wheel.W" + std::to_string(EncodingScheme::rim_size(c)));
    cls.patterns.push_back({"wheel", std::move(p)});
  }
  SemanticRule grid{"grid-edge", "grid-edge", true, "colored grid-edge", {}};
  grid.find = [](const ColoredGraph& g, std::size_t limit, std::uint64_t) {
    std::vector<Violation> out;
    for (const Edge& e : g.edges()) {
      auto grid = [&](VertexId v) { return colored_in(g, v, color::kG0) || colored_in(g, v, color::kG1); };
      if (grid(e.first) && grid(e.second)) {
        out.push_back({"grid-edge", "grid-edge", {e.first, e.second}, "edge between grid vertices"});
        if (out.size() >= limit) break;
      }
    }
    return out;
  };
  cls.rules.push_back(std::move(grid));
  SemanticRule uncolored{"uncolored", "uncolored", false, "uncolored-vertex", {}};
  uncolored.find = [](const ColoredGraph& g, std::size_t limit, std::uint64_t) {
    std::vector<Violation> out;
    for (VertexId v = 0; v < g.size() && out.size() < limit; ++v)
      if (g.colors(v).empty()) out.push_back({"uncolored", "uncolored", {v}, "vertex has no color"});
    return out;
  };
  cls.rules.push_back(std::move(uncolored));
  return cls;
}

SemanticRule vee_lift_rule(std::shared_ptr<const HereditaryClass> colored, const EncodingScheme& s) {
  SemanticRule lift{"vee-lift", "vee-lift", false, "vee-lift colored/", {}};
  lift.find = [colored, s](const ColoredGraph& g, std::size_t limit, std::uint64_t budget) {
    auto v = vee_with_map(g, s);
    CheckOptions co;
    co.budget = budget;
    co.first_only = limit == 1;
    co.per_source = limit;
    co.mode = CheckMode::kFull;
    auto r = check_constraints(v.graph, *colored, co);
    if (r.verdict == Verdict::kIndeterminate)
      throw BudgetExceeded("colored check on vee undecided: " + r.exhausted.front());
    std::vector<Violation> out;
    for (auto& x : r.violations) {
      if (out.size() >= limit) break;
      Violation y{"vee-lift", x.source, {}, "on vee: " + x.constraint};
      for (VertexId w : x.witness) y.witness.push_back(v.to_parent[w]);
      out.push_back(std::move(y));
    }
    return out;
  };
  return lift;
}

HereditaryClass compile_pure_class(const TilingProblem& t, const Palette& palette) {
  auto s = EncodingScheme::for_palette(palette);
  HereditaryClass cls;
  cls.name = "pure";
  cls.palette = palette;
  for (auto& p : h1_constraints(s)) cls.patterns.push_back({"H1", std::move(p)});
  for (auto& p : h2_constraints(s)) cls.patterns.push_back({"H2", std::move(p)});

  cls.rules.push_back(vee_lift_rule(std::make_shared<HereditaryClass>(compile_colored_class(t, palette)), s));
  return cls;
}

ColoredGraph complete_with_dummies(const ColoredGraph& g, const EncodingScheme& s) {
  std::vector<bool> inside(g.size(), false);
  for (const auto& w : free_wheel_copies(g, s)) {
    inside[w.hub] = true;
    for (VertexId r : w.rim) inside[r] = true;
  }
  ColoredGraph out = g;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!inside[v]) attach_wheel(out, v, s.dummy());
  return out;
}

ColoredGraph complete_and_joint_embed_pure(const ColoredGraph& a, const ColoredGraph& b,
                                           const TilingProblem& t, const TilingMap& theta,
                                           const PureJointEmbedOptions& opts) {
  validate(t);
  auto s = EncodingScheme::for_palette(opts.palette);
  if (opts.check_inputs) {
    auto cls = opts.cls ? *opts.cls : compile_pure_class(t, opts.palette);
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
  auto ca = complete_with_dummies(a, s);
  auto cb = complete_with_dummies(b, s);
  auto va = vee_with_map(ca, s);
  auto vb = vee_with_map(cb, s);
  JointEmbedOptions jo;
  jo.check_inputs = false;
  auto joint = joint_embed_unary(va.graph, vb.graph, theta, t, jo);
  auto vu = disjoint_union(va.graph, vb.graph);
  auto out = disjoint_union(ca, cb);

  std::vector<VertexId> lift(joint.size());
  for (VertexId i = 0; i < va.graph.size(); ++i) lift[vu.left[i]] = out.left[va.to_parent[i]];
  for (VertexId i = 0; i < vb.graph.size(); ++i) lift[vu.right[i]] = out.right[vb.to_parent[i]];
  for (const Edge& e : joint.edges())
    if (!vu.graph.adjacent(e.first, e.second)) out.graph.add_edge(lift[e.first], lift[e.second]);
  return out.graph;
}

std::vector<Edge> added_edges_in_triangles(const ColoredGraph& before, const ColoredGraph& after) {
  std::vector<Edge> out;
  for (const Edge& e : after.edges()) {
    if (e.second < before.size() && before.adjacent(e.first, e.second)) continue;
    auto a = after.neighbors(e.first), b = after.neighbors(e.second);
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) out.push_back(e);
  }
  return out;
}

std::vector<std::array<VertexId, 3>> stray_triangles(const ColoredGraph& g, const EncodingScheme& s) {
  std::vector<int> owner(g.size(), -1);
  auto copies = free_wheel_copies(g, s);
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (VertexId r : copies[i].rim) owner[r] = static_cast<int>(i);
  std::vector<std::array<VertexId, 3>> out;
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      for (VertexId w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        // A wheel triangle is its hub plus two rim vertices of that wheel.
        bool in_wheel = false;
        for (VertexId h : {u, v, w}) {
          std::array<VertexId, 2> others{};
          int k = 0;
          for (VertexId x : {u, v, w})
            if (x != h) others[k++] = x;
          if (owner[others[0]] >= 0 && owner[others[0]] == owner[others[1]] &&
              copies[owner[others[0]]].hub == h)
            in_wheel = true;
        }
        if (!in_wheel) out.push_back({u, v, w});
      }
    }
  return out;
}

}  // namespace jep
