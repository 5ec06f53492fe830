#include "jep/homomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace jep {

namespace {

class HomSearch {
 public:
  HomSearch(const ColoredGraph& h, const ColoredGraph& g, const HomOptions& opts)
      : h_(h), g_(g), opts_(opts), map_(h.size(), 0), cover_(g.size(), 0) {
    plan();
  }

  std::vector<Embedding> run() {
    if (opts_.limit == 0) return {};
    if (opts_.surjective && g_.size() > h_.size()) return {};
    if (h_.size() == 0) {
      if (!opts_.surjective || g_.size() == 0) found_.push_back({});
      return std::move(found_);
    }
    if (g_.size() == 0) return {};
    dfs(0);
    return std::move(found_);
  }

 private:
  void plan() {
    const std::size_t n = h_.size();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      VertexId best = 0;
      bool have = false;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        auto key = std::make_tuple(links[v], h_.degree(v));
        if (!have || key > std::make_tuple(links[best], h_.degree(best))) {
          best = v;
          have = true;
        }
      }
      order_.push_back(best);
      std::vector<VertexId> prev;
      for (VertexId w : h_.neighbors(best))
        if (placed[w]) prev.push_back(w);
      back_.push_back(std::move(prev));
      placed[best] = true;
      for (VertexId w : h_.neighbors(best)) ++links[w];
    }
  }

  bool color_ok(VertexId hv, VertexId gv) const {
    ColorSet want = h_.colors(hv), have = g_.colors(gv);
    return opts_.colors == ColorMatch::kExact ? want == have : have.includes(want);
  }

  bool dfs(std::size_t depth) {
    if (depth == order_.size()) {
      if (opts_.surjective && covered_ != g_.size()) return true;
      found_.push_back(map_);
      return found_.size() < opts_.limit;
    }
    if (opts_.surjective && g_.size() - covered_ > order_.size() - depth) return true;
    const VertexId v = order_[depth];
    const auto& prev = back_[depth];
    auto try_candidate = [&](VertexId c, VertexId anchor) -> bool {
      if (++expansions_ > opts_.budget)
        throw BudgetExceeded("homomorphism search budget exhausted");
      if (!color_ok(v, c)) return true;
      for (VertexId u : prev)
        if (u != anchor && !g_.adjacent(map_[u], c)) return true;
      map_[v] = c;
      if (cover_[c]++ == 0) ++covered_;
      bool more = dfs(depth + 1);
      if (--cover_[c] == 0) --covered_;
      return more;
    };
    if (!prev.empty()) {
      VertexId anchor = prev.front();
      for (VertexId u : prev)
        if (g_.degree(map_[u]) < g_.degree(map_[anchor])) anchor = u;
      for (VertexId c : g_.neighbors(map_[anchor]))
        if (!try_candidate(c, anchor)) return false;
    } else {
      for (VertexId c = 0; c < g_.size(); ++c)
        if (!try_candidate(c, v)) return false;
    }
    return true;
  }

  const ColoredGraph& h_;
  const ColoredGraph& g_;
  HomOptions opts_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> back_;
  Embedding map_;
  std::vector<std::uint32_t> cover_;
  std::size_t covered_ = 0;
  std::vector<Embedding> found_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

std::vector<Embedding> homomorphisms(const ColoredGraph& h, const ColoredGraph& g,
                                     const HomOptions& opts) {
  auto out = HomSearch(h, g, opts).run();
  if (opts.limit == std::numeric_limits<std::size_t>::max()) std::sort(out.begin(), out.end());
  return out;
}

std::optional<Embedding> find_homomorphism(const ColoredGraph& h, const ColoredGraph& g,
                                           const HomOptions& opts) {
  HomOptions one = opts;
  one.limit = 1;
  auto out = HomSearch(h, g, one).run();
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

bool is_homomorphism(const ColoredGraph& h, const ColoredGraph& g, const Embedding& map) {
  if (map.size() != h.size()) return false;
  for (VertexId v = 0; v < h.size(); ++v)
    if (map[v] >= g.size() || !g.colors(map[v]).includes(h.colors(v))) return false;
  for (const Edge& e : h.edges())
    if (!g.adjacent(map[e.first], map[e.second])) return false;
  return true;
}

bool is_induced_embedding(const ColoredGraph& h, const ColoredGraph& g, const Embedding& map) {
  if (!is_homomorphism(h, g, map)) return false;
  for (VertexId u = 0; u < h.size(); ++u)
    for (VertexId v = u + 1; v < h.size(); ++v) {
      if (map[u] == map[v]) return false;
      if (!h.adjacent(u, v) && g.adjacent(map[u], map[v])) return false;
    }
  return true;
}

}  // namespace jep
