#include "jep/jhp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "jep/homomorphism.hpp"
#include "jep/io.hpp"

namespace jep {

AugmentedModel augment(const ColoredGraph& g) {
  AugmentedModel out;
  out.graph = g;
  out.graph.set_palette_size(std::max(g.palette_size(), static_cast<int>(color::kC5)));
  out.base_size = g.size();
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      AugmentedModel::Copy copy{Edge(u, v), {}};
      // W5: hub h, rim r1..r5 with r1 = u and r3 = v.
      VertexId h = out.graph.add_vertex({color::kC5});
      VertexId r2 = out.graph.add_vertex({color::kC5});
      VertexId r4 = out.graph.add_vertex({color::kC5});
      VertexId r5 = out.graph.add_vertex({color::kC5});
      const VertexId rim[] = {u, r2, v, r4, r5};
      for (int i = 0; i < 5; ++i) {
        out.graph.add_edge(h, rim[i]);
        out.graph.add_edge(rim[i], rim[(i + 1) % 5]);
      }
      copy.added = {h, r2, r4, r5};
      out.copies.push_back(std::move(copy));
    }
  return out;
}

namespace {

std::uint64_t invariant(const ColoredGraph& g) {
  std::vector<std::size_t> deg;
  for (VertexId v = 0; v < g.size(); ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end());
  std::uint64_t h = g.size() * 1000003u + g.edge_count();
  for (auto d : deg) h = h * 131 + d;
  return h;
}

}  // namespace

std::vector<ColoredGraph> proper_hom_images(const ColoredGraph& w, std::size_t size_cap) {
  const std::size_t m = w.size();
  std::vector<int> block(m, -1);
  std::vector<std::vector<VertexId>> members;
  std::map<std::uint64_t, std::vector<ColoredGraph>> seen;
  std::vector<ColoredGraph> out;
  std::size_t generated = 0;

  auto emit = [&](ColoredGraph q) {
    if (++generated > size_cap) throw ExpansionCapExceeded("proper_hom_images: size cap exceeded");
    auto& bucket = seen[invariant(q)];
    for (const auto& o : bucket)
      if (isomorphic(o, q)) return;
    bucket.push_back(q);
    out.push_back(std::move(q));
  };

  auto quotient = [&] {
    ColoredGraph q(members.size());
    for (const Edge& e : w.edges()) q.add_edge(block[e.first], block[e.second]);
    std::vector<Edge> free;
    for (VertexId a = 0; a < q.size(); ++a)
      for (VertexId b = a + 1; b < q.size(); ++b)
        if (!q.adjacent(a, b)) free.emplace_back(a, b);
    if (free.size() > 62) throw ExpansionCapExceeded("proper_hom_images: too many free pairs");
    const bool trivial = members.size() == m;
    for (std::uint64_t mask = trivial ? 1 : 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      ColoredGraph h = q;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1) h.add_edge(free[i].first, free[i].second);
      emit(std::move(h));
    }
  };

  std::function<void(VertexId)> rec = [&](VertexId v) {
    if (v == m) {
      quotient();
      return;
    }
    for (std::size_t b = 0; b <= members.size(); ++b) {
      if (b < members.size() &&
          std::any_of(members[b].begin(), members[b].end(), [&](VertexId x) { return w.adjacent(x, v); }))
        continue;
      if (b == members.size()) members.emplace_back();
      members[b].push_back(v);
      block[v] = static_cast<int>(b);
      rec(v + 1);
      members[b].pop_back();
      if (members[b].empty()) members.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

struct LinkWalk {
  VertexId center = 0;
  std::vector<VertexId> walk;  // closed: last vertex is adjacent to the first
};

// Shortest odd closed walk inside some neighborhood g[N(c)], if shorter than
// `below`.
std::optional<LinkWalk> shortest_odd_link_walk(const ColoredGraph& g, std::size_t below) {
  std::optional<LinkWalk> best;
  std::vector<int> local(g.size(), -1);
  for (VertexId c = 0; c < g.size(); ++c) {
    auto nb = g.neighbors(c);
    const std::size_t L = nb.size();
    if (L < 3) continue;
    for (std::size_t i = 0; i < L; ++i) local[nb[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(L);
    for (std::size_t i = 0; i < L; ++i)
      for (VertexId y : g.neighbors(nb[i]))
        if (local[y] >= 0) adj[i].push_back(local[y]);
    std::vector<int> dist(2 * L), parent(2 * L);
    for (std::size_t s = 0; s < L; ++s) {
      const std::size_t limit = best ? best->walk.size() : below;
      std::fill(dist.begin(), dist.end(), -1);
      std::deque<int> queue{static_cast<int>(2 * s)};
      dist[2 * s] = 0;
      while (!queue.empty()) {
        int st = queue.front();
        queue.pop_front();
        if (static_cast<std::size_t>(dist[st]) + 1 >= limit) break;
        int x = st / 2, par = st % 2;
        for (int y : adj[x]) {
          int nx = 2 * y + (1 - par);
          if (dist[nx] >= 0) continue;
          dist[nx] = dist[st] + 1;
          parent[nx] = st;
          queue.push_back(nx);
        }
      }
      int target = static_cast<int>(2 * s + 1);
      if (dist[target] < 0 || static_cast<std::size_t>(dist[target]) >= limit) continue;
      std::vector<VertexId> walk;
      for (int st = target; st != static_cast<int>(2 * s); st = parent[st]) walk.push_back(nb[st / 2]);
      std::reverse(walk.begin(), walk.end());  // ends at s; rotate so it starts there
      std::rotate(walk.begin(), walk.end() - 1, walk.end());
      best = LinkWalk{c, std::move(walk)};
    }
    for (VertexId y : nb) local[y] = -1;
    if (best && best->walk.size() == 3) break;
  }
  return best;
}

}  // namespace

std::optional<Embedding> non_embedding_wheel_hom(std::size_t n, const ColoredGraph& g) {
  auto lw = shortest_odd_link_walk(g, n);
  if (!lw) return std::nullopt;
  const auto& w = lw->walk;
  Embedding map{lw->center, w[0]};
  for (std::size_t i = 0; i < (n - w.size()) / 2; ++i) {
    map.push_back(w[1]);
    map.push_back(w[0]);
  }
  for (std::size_t i = 1; i < w.size(); ++i) map.push_back(w[i]);
  return map;
}

std::optional<std::array<VertexId, 4>> find_k4(const ColoredGraph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<VertexId> common;
    std::set_intersection(g.neighbors(e.first).begin(), g.neighbors(e.first).end(),
                          g.neighbors(e.second).begin(), g.neighbors(e.second).end(),
                          std::back_inserter(common));
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.adjacent(common[i], common[j])) return std::array{e.first, e.second, common[i], common[j]};
  }
  return std::nullopt;
}

ImageCheck no_proper_image_check(const ColoredGraph& g, const EncodingScheme& s) {
  if (auto k = find_k4(g)) return {Verdict::kFail, "K4", {k->begin(), k->end()}};
  for (ColorId c = 1; c <= s.k; ++c) {
    auto n = EncodingScheme::rim_size(c);
    if (auto m = non_embedding_wheel_hom(n, g)) return {Verdict::kFail, "W" + std::to_string(n), *m};
  }
  return {};
}

HereditaryClass compile_jhp_class(const TilingProblem& t, const Palette& palette) {
  auto cls = compile_pure_class(t, palette);
  cls.name = "jhp";
  auto k4 = induced_pattern(complete_graph(4), "K4");
  cls.patterns.push_back({"K4", std::move(k4)});
  auto s = EncodingScheme::for_palette(palette);
  for (ColorId c = 1; c <= s.k; ++c) {
    auto n = EncodingScheme::rim_size(c);
    SemanticRule r{"no-proper-image.W" + std::to_string(n), "no-proper-image", false,
                   "no-proper-image wheel=" + std::to_string(c), {}};
    r.find = [n](const ColoredGraph& g, std::size_t, std::uint64_t) {
      std::vector<Violation> out;
      if (auto m = non_embedding_wheel_hom(n, g))
        out.push_back({"no-proper-image", "no-proper-image.W" + std::to_string(n), *m,
                       "homomorphism from W" + std::to_string(n) + " that is not an induced embedding"});
      return out;
    };
    cls.rules.push_back(std::move(r));
  }
  return cls;
}

std::string to_string(RigidResult::Status s) {
  switch (s) {
    case RigidResult::Status::kRigid: return "rigid";
    case RigidResult::Status::kNotRigid: return "not-rigid";
    case RigidResult::Status::kIndeterminate: return "indeterminate";
    case RigidResult::Status::kInapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

// a with v merged into u; returns the graph and old -> new ids.
std::pair<ColoredGraph, std::vector<VertexId>> merge(const ColoredGraph& a, VertexId u, VertexId v) {
  std::vector<VertexId> id(a.size());
  VertexId next = 0;
  for (VertexId x = 0; x < a.size(); ++x)
    if (x != v) id[x] = next++;
  id[v] = id[u];
  ColoredGraph q(a.size() - 1, a.palette_size());
  for (VertexId x = 0; x < a.size(); ++x) q.set_colors(id[x], q.colors(id[x]) | a.colors(x));
  for (const Edge& e : a.edges()) q.add_edge(id[e.first], id[e.second]);
  return {std::move(q), std::move(id)};
}

}  // namespace

RigidResult rigid_homomorphism_check(const ColoredGraph& a, const ColoredGraph& c,
                                     const HereditaryClass& cls, const RigidOptions& opts) {
  if (opts.require_member) {
    CheckOptions co;
    co.budget = opts.budget;
    co.first_only = true;
    auto r = check_constraints(c, cls, co);
    if (r.verdict == Verdict::kFail)
      return {RigidResult::Status::kInapplicable, {},
              "target outside the class: " + format_violation(r.violations.front(), cls.palette, c)};
    if (r.verdict == Verdict::kIndeterminate)
      return {RigidResult::Status::kIndeterminate, {}, "target membership undecided"};
  }
  // Pairs at distance 2 first: the usual place for a fold.
  std::vector<std::pair<std::size_t, Edge>> pairs;
  for (VertexId u = 0; u < a.size(); ++u) {
    std::vector<int> dist(a.size(), -1);
    std::deque<VertexId> q{u};
    dist[u] = 0;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (VertexId y : a.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    for (VertexId v = u + 1; v < a.size(); ++v)
      if (!a.adjacent(u, v))
        pairs.push_back({dist[v] < 0 ? a.size() + 1 : static_cast<std::size_t>(dist[v]), Edge(u, v)});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  HomOptions ho;
  ho.budget = opts.pair_budget;
  std::size_t exhausted = 0;
  for (const auto& [d, e] : pairs) {
    try {
      auto [q, id] = merge(a, e.first, e.second);
      if (auto m = find_homomorphism(q, c, ho)) {
        Embedding w(a.size());
        for (VertexId x = 0; x < a.size(); ++x) w[x] = (*m)[id[x]];
        return {RigidResult::Status::kNotRigid, std::move(w),
                "merges " + std::to_string(e.first) + " and " + std::to_string(e.second)};
      }
    } catch (const BudgetExceeded&) {
      ++exhausted;
    }
    try {
      ColoredGraph j = a;
      j.add_edge(e.first, e.second);
      if (auto m = find_homomorphism(j, c, ho))
        return {RigidResult::Status::kNotRigid, *m,
                "joins " + std::to_string(e.first) + " and " + std::to_string(e.second)};
    } catch (const BudgetExceeded&) {
      ++exhausted;
    }
  }
  if (exhausted)
    return {RigidResult::Status::kIndeterminate, {},
            std::to_string(exhausted) + " defect searches ran out of budget"};
  return {};
}

bool TwoRelationStructure::valid() const {
  for (VertexId u = 0; u < size; ++u)
    for (VertexId v = u + 1; v < size; ++v)
      if (e.count(Edge(u, v)) == n.count(Edge(u, v))) return false;
  for (const auto& r : {e, n})
    for (const Edge& x : r)
      if (x.first == x.second || x.second >= size) return false;
  return true;
}

TwoRelationStructure TwoRelationStructure::from_graph(const ColoredGraph& g, std::string name) {
  TwoRelationStructure s{std::move(name), g.size(), {}, {}};
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v) (g.adjacent(u, v) ? s.e : s.n).insert(Edge(u, v));
  return s;
}

namespace {

// Backtracking over maps [0, a.size) -> [0, b.size); `pair_ok` sees each
// assigned pair once.
std::optional<std::vector<VertexId>> search_map(
    std::size_t from, std::size_t to, bool injective,
    const std::function<bool(VertexId, VertexId, VertexId, VertexId)>& pair_ok) {
  std::vector<VertexId> map(from);
  std::vector<bool> used(to, false);
  std::function<bool(VertexId)> rec = [&](VertexId i) {
    if (i == from) return true;
    for (VertexId x = 0; x < to; ++x) {
      if (injective && used[x]) continue;
      map[i] = x;
      bool ok = true;
      for (VertexId j = 0; j < i && ok; ++j) ok = pair_ok(j, i, map[j], x);
      if (!ok) continue;
      used[x] = true;
      if (rec(i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (rec(0)) return map;
  return std::nullopt;
}

bool rel(const std::set<Edge>& r, VertexId u, VertexId v) { return u != v && r.count(Edge(u, v)); }

}  // namespace

bool embeds(const TwoRelationStructure& h, const TwoRelationStructure& s) {
  return search_map(h.size, s.size, true, [&](VertexId u, VertexId v, VertexId x, VertexId y) {
           return rel(h.e, u, v) == rel(s.e, x, y) && rel(h.n, u, v) == rel(s.n, x, y);
         }).has_value();
}

bool is_member(const TwoRelationStructure& s, const TwoRelationClass& cls) {
  return std::none_of(cls.forbidden.begin(), cls.forbidden.end(),
                      [&](const TwoRelationStructure& f) { return embeds(f, s); });
}

bool is_homomorphism(const TwoRelationStructure& a, const TwoRelationStructure& b,
                     const std::vector<VertexId>& map) {
  if (map.size() != a.size) return false;
  for (VertexId x : map)
    if (x >= b.size) return false;
  for (const Edge& x : a.e)
    if (!rel(b.e, map[x.first], map[x.second])) return false;
  for (const Edge& x : a.n)
    if (!rel(b.n, map[x.first], map[x.second])) return false;
  return true;
}

std::optional<std::vector<VertexId>> find_homomorphism(const TwoRelationStructure& a,
                                                       const TwoRelationStructure& b) {
  return search_map(a.size, b.size, false, [&](VertexId u, VertexId v, VertexId x, VertexId y) {
    return (!rel(a.e, u, v) || rel(b.e, x, y)) && (!rel(a.n, u, v) || rel(b.n, x, y));
  });
}

TwoRelationClass edge_nonedge_transform(const HereditaryClass& cls_red) {
  TwoRelationClass out;
  out.name = cls_red.name + "+nonedge";
  std::vector<ColoredGraph> graphs;
  for (const auto& cp : cls_red.patterns) {
    std::vector<ConstraintPattern> injective;
    if (cp.pattern.injective) injective.push_back(cp.pattern);
    else injective = quotients(cp.pattern);
    for (const auto& p : injective)
      for (const auto& full : expand_noninduced(p)) graphs.push_back(full.graph);
  }
  for (auto& g : dedupe_isomorphic(std::move(graphs)))
    out.forbidden.push_back(TwoRelationStructure::from_graph(g, "forbidden"));
  TwoRelationStructure both{"both", 2, {Edge(0, 1)}, {Edge(0, 1)}};
  TwoRelationStructure neither{"neither", 2, {}, {}};
  out.forbidden.push_back(both);
  out.forbidden.push_back(neither);
  return out;
}

std::string format_two_relation(const TwoRelationStructure& s) {
  std::ostringstream out;
  out << "structure " << (s.name.empty() ? "unnamed" : s.name) << " size=" << s.size << '\n';
  for (const Edge& x : s.e) out << "e " << x.first << ' ' << x.second << '\n';
  for (const Edge& x : s.n) out << "n " << x.first << ' ' << x.second << '\n';
  return out.str();
}

TwoRelationStructure parse_two_relation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TwoRelationStructure s;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (!header) {
      std::string size;
      if (kind != "structure" || !(ls >> s.name >> size) || size.rfind("size=", 0) != 0)
        throw fail("expected 'structure <name> size=<n>'");
      try {
        s.size = std::stoul(size.substr(5));
      } catch (const std::exception&) {
        throw fail("bad size");
      }
      header = true;
      continue;
    }
    if (kind != "e" && kind != "n") throw fail("unknown line kind '" + kind + "'");
    long a = -1, b = -1;
    if (!(ls >> a >> b) || a < 0 || b < 0 || a == b || static_cast<std::size_t>(std::max(a, b)) >= s.size)
      throw fail("bad pair");
    (kind == "e" ? s.e : s.n).insert(Edge(static_cast<VertexId>(a), static_cast<VertexId>(b)));
  }
  if (!header) throw ParseError("missing structure header");
  return s;
}

}  // namespace jep
