#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "jep/graph.hpp"
#include "jep/hereditary_class.hpp"
#include "jep/pattern.hpp"
#include "jep/unary.hpp"

namespace jep::testing {

inline ColoredGraph random_graph(std::mt19937_64& rng, std::size_t n, double p,
                                 int palette = 0, double color_p = 0.0) {
  ColoredGraph g(n, palette);
  std::bernoulli_distribution edge(p), col(color_p);
  for (VertexId v = 0; v < n; ++v)
    for (int c = 1; c <= palette; ++c)
      if (col(rng)) g.add_color(v, c);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

/// Calls visit(map) for every map from [0,k) to [0,n) (injective if asked).
inline void for_each_map(std::size_t k, std::size_t n, bool injective,
                         const std::function<void(const std::vector<VertexId>&)>& visit) {
  std::vector<VertexId> map(k, 0);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      visit(map);
      return;
    }
    for (VertexId c = 0; c < n; ++c) {
      if (injective && used[c]) continue;
      map[i] = c;
      used[c] = true;
      rec(i + 1);
      used[c] = false;
    }
  };
  rec(0);
}

/// Hub 0, rim 1..n in cycle order. Independent of the library's builder.
inline ColoredGraph plain_wheel(std::size_t n) {
  ColoredGraph g(n + 1);
  for (VertexId i = 1; i <= n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n ? 1 : i + 1);
  }
  return g;
}

/// Connected-ish random sample: grows a set from a random vertex by adding
/// random neighbors of the set (random vertices when it gets stuck).
inline std::vector<VertexId> random_ball(std::mt19937_64& rng, const ColoredGraph& g,
                                         std::size_t size) {
  std::vector<VertexId> out;
  if (g.size() == 0) return out;
  std::vector<bool> in(g.size(), false);
  auto take = [&](VertexId v) {
    in[v] = true;
    out.push_back(v);
  };
  take(static_cast<VertexId>(rng() % g.size()));
  while (out.size() < std::min(size, g.size())) {
    std::vector<VertexId> frontier;
    for (VertexId u : out)
      for (VertexId v : g.neighbors(u))
        if (!in[v]) frontier.push_back(v);
    if (frontier.empty()) {
      VertexId v;
      do v = static_cast<VertexId>(rng() % g.size());
      while (in[v]);
      take(v);
    } else {
      VertexId v = frontier[rng() % frontier.size()];
      if (!in[v]) take(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Flips `edges` random pairs and recolors `recolor` random vertices with a
/// single color from 1..palette.
inline void perturb(std::mt19937_64& rng, ColoredGraph& g, int edges, int recolor, int palette) {
  if (g.size() < 2) return;
  for (int e = 0; e < edges; ++e) {
    VertexId u = static_cast<VertexId>(rng() % g.size()), v = static_cast<VertexId>(rng() % g.size());
    if (u == v) continue;
    if (g.adjacent(u, v)) g.remove_edge(u, v);
    else g.add_edge(u, v);
  }
  for (int c = 0; c < recolor; ++c) {
    VertexId v = static_cast<VertexId>(rng() % g.size());
    g.set_colors(v, ColorSet{static_cast<ColorId>(1 + rng() % palette)});
  }
}

/// Deletes a random witness vertex until g is a member.
inline ColoredGraph repair_to_member(std::mt19937_64& rng, ColoredGraph g, const HereditaryClass& cls) {
  CheckOptions opts;
  opts.first_only = true;
  while (true) {
    auto r = check_constraints(g, cls, opts);
    if (r.verdict == Verdict::kPass) return g;
    if (r.verdict == Verdict::kIndeterminate) throw BudgetExceeded("repair undecided");
    const auto& w = r.violations.front().witness;
    VertexId v = w.empty() ? static_cast<VertexId>(rng() % g.size()) : w[rng() % w.size()];
    g = remove_vertices(g, std::span(&v, 1)).graph;
  }
}

/// Naive joint embedding oracle: some graph on at most |a|+|b| vertices in
/// cls contains both induced. a sits on the first |a| vertices.
inline bool naive_jep(const ColoredGraph& a, const ColoredGraph& b, const HereditaryClass& cls) {
  CheckOptions opts;
  opts.first_only = true;
  if (!check_constraints(a, cls, opts).pass() || !check_constraints(b, cls, opts).pass()) return false;
  for (std::size_t m = std::max(a.size(), b.size()); m <= a.size() + b.size(); ++m) {
    std::vector<Edge> free;
    for (VertexId u = 0; u < m; ++u)
      for (VertexId v = u + 1; v < m; ++v)
        if (v >= a.size()) free.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      ColoredGraph c(m);
      for (const Edge& e : a.edges()) c.add_edge(e.first, e.second);
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1) c.add_edge(free[i].first, free[i].second);
      if (contains_induced(b, c) && check_constraints(c, cls, opts).pass()) return true;
    }
  }
  return false;
}

/// One or two uncolored forbidden graphs on 2-3 vertices, some with a
/// don't-care pair.
inline HereditaryClass random_toy_class(std::mt19937_64& rng) {
  HereditaryClass cls;
  cls.name = "toy";
  std::size_t count = 1 + rng() % 2;
  for (std::size_t i = 0; i < count; ++i) {
    auto g = random_graph(rng, 2 + rng() % 2, 0.5);
    auto p = induced_pattern(g, "toy" + std::to_string(i));
    if (rng() % 3 == 0 && !p.forbidden.empty()) p.forbidden.pop_back();
    cls.patterns.push_back({"toy", std::move(p)});
  }
  return cls;
}

/// Every graph on n vertices, one per isomorphism class.
inline std::vector<ColoredGraph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<ColoredGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    ColoredGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return dedupe_isomorphic(std::move(out));
}

/// Random small piece of a canonical model or joint embedding, lightly
/// perturbed; usually outside the class.
inline ColoredGraph unary_sample(std::mt19937_64& rng, const TilingProblem& t, std::size_t max_n) {
  int n = 1 + static_cast<int>(rng() % 3);
  ColoredGraph base;
  switch (rng() % 5) {
    case 0: base = canonical_A(n, t); break;
    case 1: base = canonical_B(n, t); break;
    case 2: base = disjoint_union(canonical_A(n, t), canonical_B(n, t)).graph; break;
    case 3: {
      // arbitrary theta, usually breaking the rules
      TilingMap theta = TilingMap::patch(n, n);
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) theta.set(x, y, 1 + static_cast<int>(rng() % t.tile_count));
      JointEmbedOptions o;
      o.check_inputs = false;
      base = joint_embed_unary(canonical_A(n, t), canonical_B(n, t), theta, t, o);
      break;
    }
    default: {
      TilingMap theta = TilingMap::periodic(1, 1);
      theta.set(0, 0, 1 + static_cast<int>(rng() % t.tile_count));
      JointEmbedOptions o;
      o.check_inputs = false;
      base = joint_embed_unary(canonical_A(n, t), canonical_B(n, t), theta, t, o);
    }
  }
  auto keep = random_ball(rng, base, 1 + rng() % max_n);
  auto g = induced_subgraph(base, keep).graph;
  perturb(rng, g, static_cast<int>(rng() % 4), static_cast<int>(rng() % 3), 11);
  if (rng() % 5 == 0 && g.size() > 0) g.add_color(static_cast<VertexId>(rng() % g.size()), 1 + rng() % 11);
  return g;
}

}  // namespace jep::testing
