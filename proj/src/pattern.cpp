#include "jep/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace jep {

void validate(const ConstraintPattern& p) {
  const auto n = p.graph.size();
  for (const Edge& e : p.forbidden) {
    if (e.first == e.second || e.second >= n)
      throw std::invalid_argument("pattern '" + p.name + "': bad forbidden pair");
    if (p.graph.adjacent(e.first, e.second))
      throw std::invalid_argument("pattern '" + p.name + "': pair both required and forbidden");
  }
  for (const Edge& e : p.distinct)
    if (e.first == e.second || e.second >= n)
      throw std::invalid_argument("pattern '" + p.name + "': bad distinct pair");
}

ConstraintPattern induced_pattern(const ColoredGraph& g, std::string name) {
  ConstraintPattern p{std::move(name), g, {}, true, {}};
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) p.forbidden.emplace_back(u, v);
  return p;
}

namespace {

struct Step {
  VertexId pv = 0;
  std::vector<VertexId> required;   // earlier pattern vertices joined by a required edge
  std::vector<VertexId> forbidden;  // earlier pattern vertices joined by a forbidden pair
  std::vector<VertexId> distinct;   // earlier vertices that need a different image
};

std::vector<Step> plan_search(const ConstraintPattern& p) {
  const std::size_t n = p.graph.size();
  std::vector<std::vector<VertexId>> forb(n), dist(n);
  for (const Edge& e : p.forbidden) {
    forb[e.first].push_back(e.second);
    forb[e.second].push_back(e.first);
  }
  for (const Edge& e : p.distinct) {
    dist[e.first].push_back(e.second);
    dist[e.second].push_back(e.first);
  }

  std::vector<bool> placed(n, false);
  std::vector<std::size_t> req_to_placed(n, 0), forb_to_placed(n, 0);
  std::vector<Step> steps;
  steps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    VertexId best = 0;
    bool have = false;
    auto key = [&](VertexId v) {
      return std::make_tuple(req_to_placed[v], forb_to_placed[v], p.graph.degree(v),
                             p.graph.colors(v).size());
    };
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!have || key(v) > key(best)) {
        best = v;
        have = true;
      }
    }
    Step s;
    s.pv = best;
    for (VertexId w : p.graph.neighbors(best))
      if (placed[w]) s.required.push_back(w);
    for (VertexId w : forb[best])
      if (placed[w]) s.forbidden.push_back(w);
    if (!p.injective)
      for (VertexId w : dist[best])
        if (placed[w]) s.distinct.push_back(w);
    placed[best] = true;
    for (VertexId w : p.graph.neighbors(best)) ++req_to_placed[w];
    for (VertexId w : forb[best]) ++forb_to_placed[w];
    steps.push_back(std::move(s));
  }
  return steps;
}

class PatternSearch {
 public:
  PatternSearch(const ConstraintPattern& p, const ColoredGraph& g, const MatchOptions& opts)
      : p_(p), g_(g), opts_(opts), steps_(plan_search(p)), map_(p.graph.size(), 0),
        used_(g.size(), 0) {}

  std::vector<Embedding> run() {
    if (p_.injective && p_.graph.size() > g_.size()) return {};
    if (opts_.limit == 0) return {};
    dfs(0);
    return std::move(found_);
  }

 private:
  bool color_ok(VertexId pv, VertexId hv) const {
    ColorSet want = p_.graph.colors(pv);
    ColorSet have = g_.colors(hv);
    return opts_.colors == ColorMatch::kExact ? want == have : have.includes(want);
  }

  bool accept(const Step& s, VertexId c, VertexId anchor) {
    if (++expansions_ > opts_.budget)
      throw BudgetExceeded("pattern '" + p_.name + "': search budget exhausted");
    if (!color_ok(s.pv, c)) return false;
    if (p_.injective) {
      if (used_[c] != 0) return false;
      if (g_.degree(c) < p_.graph.degree(s.pv)) return false;
    }
    for (VertexId u : s.required)
      if (u != anchor && !g_.adjacent(map_[u], c)) return false;
    for (VertexId u : s.forbidden)
      if (map_[u] == c ? false : g_.adjacent(map_[u], c)) return false;
    for (VertexId u : s.distinct)
      if (map_[u] == c) return false;
    return true;
  }

  // Returns false once the result limit is reached.
  bool dfs(std::size_t depth) {
    if (depth == steps_.size()) {
      found_.push_back(map_);
      return found_.size() < opts_.limit;
    }
    const Step& s = steps_[depth];
    auto descend = [&](VertexId c) {
      map_[s.pv] = c;
      ++used_[c];
      bool more = dfs(depth + 1);
      --used_[c];
      return more;
    };
    if (!s.required.empty()) {
      VertexId anchor = s.required.front();
      for (VertexId u : s.required)
        if (g_.degree(map_[u]) < g_.degree(map_[anchor])) anchor = u;
      for (VertexId c : g_.neighbors(map_[anchor]))
        if (accept(s, c, anchor) && !descend(c)) return false;
    } else {
      for (VertexId c = 0; c < g_.size(); ++c)
        if (accept(s, c, s.pv) && !descend(c)) return false;
    }
    return true;
  }

  const ConstraintPattern& p_;
  const ColoredGraph& g_;
  MatchOptions opts_;
  std::vector<Step> steps_;
  Embedding map_;
  std::vector<std::uint32_t> used_;
  std::vector<Embedding> found_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

std::vector<Embedding> match_pattern(const ConstraintPattern& p, const ColoredGraph& g,
                                     const MatchOptions& opts) {
  auto out = PatternSearch(p, g, opts).run();
  if (opts.limit == std::numeric_limits<std::size_t>::max()) std::sort(out.begin(), out.end());
  return out;
}

std::optional<Embedding> find_match(const ConstraintPattern& p, const ColoredGraph& g,
                                    const MatchOptions& opts) {
  MatchOptions one = opts;
  one.limit = 1;
  auto out = PatternSearch(p, g, one).run();
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

std::optional<Embedding> find_induced(const ColoredGraph& h, const ColoredGraph& g,
                                      ColorMatch colors) {
  MatchOptions opts;
  opts.colors = colors;
  return find_match(induced_pattern(h), g, opts);
}

bool contains_induced(const ColoredGraph& h, const ColoredGraph& g, ColorMatch colors) {
  return find_induced(h, g, colors).has_value();
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::vector<std::pair<std::uint32_t, std::size_t>>>;

Signature signature(const ColoredGraph& g) {
  std::vector<std::pair<std::uint32_t, std::size_t>> profile;
  for (VertexId v = 0; v < g.size(); ++v) profile.emplace_back(g.colors(v).bits(), g.degree(v));
  std::sort(profile.begin(), profile.end());
  return {g.size(), g.edge_count(), std::move(profile)};
}

}  // namespace

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (signature(a) != signature(b)) return false;
  return contains_induced(a, b, ColorMatch::kExact);
}

std::vector<ColoredGraph> dedupe_isomorphic(std::vector<ColoredGraph> graphs) {
  std::map<Signature, std::vector<std::size_t>> buckets;
  std::vector<ColoredGraph> out;
  for (auto& g : graphs) {
    auto& bucket = buckets[signature(g)];
    bool seen = false;
    for (std::size_t idx : bucket)
      if (contains_induced(g, out[idx], ColorMatch::kExact)) {
        seen = true;
        break;
      }
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<ConstraintPattern> quotients(const ConstraintPattern& p, std::size_t cap) {
  validate(p);
  if (p.injective) return {p};
  const std::size_t n = p.graph.size();
  std::set<Edge> distinct(p.distinct.begin(), p.distinct.end());
  std::vector<std::vector<VertexId>> classes;
  std::vector<std::uint32_t> class_of(n, 0);
  std::vector<ConstraintPattern> out;

  auto emit = [&] {
    ConstraintPattern q;
    q.name = p.name + "/q" + std::to_string(out.size());
    q.graph = ColoredGraph(classes.size(), p.graph.palette_size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      ColorSet cs;
      for (VertexId v : classes[c]) cs = cs | p.graph.colors(v);
      q.graph.set_colors(static_cast<VertexId>(c), cs);
    }
    for (const Edge& e : p.graph.edges()) q.graph.add_edge(class_of[e.first], class_of[e.second]);
    std::set<Edge> forb;
    for (const Edge& e : p.forbidden) {
      VertexId a = class_of[e.first], b = class_of[e.second];
      if (a == b) continue;
      if (q.graph.adjacent(a, b)) return;  // unsatisfiable identification
      forb.emplace(a, b);
    }
    q.forbidden.assign(forb.begin(), forb.end());
    out.push_back(std::move(q));
    if (out.size() > cap)
      throw ExpansionCapExceeded("pattern '" + p.name + "': more than " + std::to_string(cap) +
                                 " quotients");
  };

  auto can_join = [&](VertexId v, const std::vector<VertexId>& cls) {
    for (VertexId u : cls)
      if (p.graph.adjacent(u, v) || distinct.count(Edge(u, v))) return false;
    return true;
  };

  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      emit();
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!can_join(v, classes[c])) continue;
      classes[c].push_back(v);
      class_of[v] = static_cast<std::uint32_t>(c);
      self(self, v + 1);
      classes[c].pop_back();
    }
    classes.push_back({v});
    class_of[v] = static_cast<std::uint32_t>(classes.size() - 1);
    self(self, v + 1);
    classes.pop_back();
  };
  rec(rec, 0);
  return out;
}

std::vector<ConstraintPattern> expand_noninduced(const ConstraintPattern& p,
                                                 std::size_t max_free_pairs) {
  std::vector<ColoredGraph> completions;
  for (const ConstraintPattern& q : quotients(p)) {
    std::set<Edge> fixed(q.forbidden.begin(), q.forbidden.end());
    std::vector<Edge> free_pairs;
    for (VertexId u = 0; u < q.graph.size(); ++u)
      for (VertexId v = u + 1; v < q.graph.size(); ++v)
        if (!q.graph.adjacent(u, v) && !fixed.count(Edge(u, v))) free_pairs.emplace_back(u, v);
    if (free_pairs.size() > max_free_pairs)
      throw ExpansionCapExceeded("pattern '" + p.name + "' has " +
                                 std::to_string(free_pairs.size()) + " don't-care pairs");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
      ColoredGraph g = q.graph;
      for (std::size_t i = 0; i < free_pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(free_pairs[i].first, free_pairs[i].second);
      completions.push_back(std::move(g));
    }
  }
  std::vector<ConstraintPattern> out;
  for (auto& g : dedupe_isomorphic(std::move(completions)))
    out.push_back(induced_pattern(g, p.name + "#" + std::to_string(out.size())));
  return out;
}

}  // namespace jep
