#include <random>

#include "doctest.h"
#include "jep/unary.hpp"
#include "support.hpp"

using namespace jep;
using namespace jep::testing;

namespace {

TilingProblem make(int tiles, std::set<std::pair<int, int>> h = {}, std::set<std::pair<int, int>> v = {}) {
  return TilingProblem{tiles, std::move(h), std::move(v)};
}

std::size_t count_constraint(const HereditaryClass& cls, const std::string& id) {
  return std::count_if(cls.patterns.begin(), cls.patterns.end(),
                       [&](const ClassPattern& p) { return p.constraint == id; });
}

CheckResult run(const ColoredGraph& g, const HereditaryClass& cls, CheckMode mode,
                std::vector<std::string> only = {}) {
  CheckOptions o;
  o.mode = mode;
  o.first_only = true;
  o.only = std::move(only);
  return check_constraints(g, cls, o);
}

// Theta whose bottom row reads 2,2,1; legal for no_double_one().
TilingMap row_theta() {
  TilingMap m = TilingMap::periodic(3, 1);
  m.set(0, 0, 2);
  m.set(1, 0, 2);
  m.set(2, 0, 1);
  return m;
}

// 2 tiles; 1 may not be followed by 1 horizontally.
TilingProblem no_double_one() { return make(2, {{1, 1}}); }

}  // namespace

TEST_CASE("canonical model sizes") {
  auto t1 = make(1), t2 = make(2);
  CHECK(canonical_A(1, t1).size() == 4);
  CHECK(canonical_A(2, t1).size() == 16);
  CHECK(canonical_B(1, t1).size() == 5);
  CHECK(canonical_B(2, t2).size() == 24);
  for (int n = 1; n <= 4; ++n) {
    CHECK(canonical_A(n, t2).size() == static_cast<std::size_t>(n + 2 * (n - 1) + 3 * n * n));
    CHECK(canonical_B(n, t2).size() == canonical_A(n, t2).size() + 2 * n * n);
  }
}

TEST_CASE("derive_relations") {
  auto t = make(2);
  CanonicalLayout L{3, 0};
  auto r = derive_relations(canonical_A(3, t), 2);
  CHECK(r.arrow[0] == std::set<VertexPair>{{L.path(0), L.path(1)}, {L.path(1), L.path(2)}});
  CHECK(r.arrow[1].empty());
  CHECK(r.proj_x[0].size() == 9);
  CHECK(r.proj_x[0].count({L.grid(2, 1), L.path(2)}));
  CHECK(r.proj_y[0].count({L.grid(2, 1), L.path(1)}));

  // x, a, b, y with a not in C1
  ColoredGraph g(4);
  g.set_colors(0, {color::kPp0});
  g.set_colors(1, {color::kC3});
  g.set_colors(2, {color::kC2});
  g.set_colors(3, {color::kPp0});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(derive_relations(g, 1).arrow[0].empty());
  g.set_colors(1, {color::kC1});
  CHECK(derive_relations(g, 1).arrow[0].size() == 1);

  auto b = canonical_B(2, t);
  auto rb = derive_relations(b, 2);
  int type1 = 0, type2 = 0;
  for (auto [h, tile, k] : rb.tau_i) (k == 1 ? type1 : type2)++;
  CHECK(type1 == 4);
  CHECK(type2 == 4);
  CanonicalLayout LB{2, 2};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      CHECK(rb.full_tile_set(LB.grid(i, j)));
      REQUIRE(rb.tile_chains.count(LB.grid(i, j)));
      CHECK(rb.tile_chains.at(LB.grid(i, j)).size() == 1);
      CHECK(rb.tiles(LB.grid(i, j), 2) == std::vector<VertexId>{LB.tile(i, j, 2)});
    }
}

TEST_CASE("coordinates") {
  auto t = make(1);
  CanonicalLayout L{3, 0};
  auto a = canonical_A(3, t);
  auto c = coordinates(a);
  CHECK(c.size() == 9);
  CHECK(c.at(L.grid(2, 1)) == std::pair{2, 1});
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) CHECK(c.at(L.grid(i, j)) == std::pair{i, j});

  // a bare grid vertex has no coordinates
  a.add_vertex({color::kG0});
  CHECK(coordinates(a).size() == 9);

  // a path vertex not reachable from the origin
  ColoredGraph f(6);
  f.set_colors(0, {color::kPp0});
  f.set_colors(1, {color::kG0});
  f.set_colors(2, {color::kC3});
  f.set_colors(3, {color::kC4});
  f.add_edge(1, 2);
  f.add_edge(2, 0);
  f.add_edge(1, 3);
  f.add_edge(3, 0);
  CHECK(coordinates(f).empty());
  f.set_colors(0, {color::kO0});
  CHECK(coordinates(f).at(1) == std::pair{0, 0});

  // two x-projections at different distances
  auto amb = canonical_A(2, t);
  VertexId extra = amb.add_vertex({color::kC3});
  amb.add_edge(CanonicalLayout{2, 0}.grid(0, 0), extra);
  amb.add_edge(extra, 1);
  CHECK_THROWS_AS(coordinates(amb), AmbiguityError);
}

TEST_CASE("compile_unary_class structure") {
  auto cls = compile_unary_class(make(1));
  CHECK(count_constraint(cls, "c1") == 55);
  CHECK(count_constraint(cls, "c7") == 0);
  CHECK(count_constraint(cls, "c6") == 0);
  REQUIRE(count_constraint(cls, "c8") == 1);
  auto it = std::find_if(cls.patterns.begin(), cls.patterns.end(),
                         [](const ClassPattern& p) { return p.constraint == "c8"; });
  CHECK(it->pattern.size() == 9);
  CHECK(it->pattern.forbidden.size() == 1);
  CHECK(it->pattern.graph.edge_count() == 9);

  auto cls2 = compile_unary_class(make(2, {{1, 2}}, {{2, 2}}));
  CHECK(count_constraint(cls2, "c7") == 2 * 64);
  CHECK(count_constraint(cls2, "c9") == 2 * 2 * 64);
  for (const auto& p : cls2.patterns) CHECK_NOTHROW(validate(p.pattern));
  CHECK(cls2.rules.size() == 9);
}

TEST_CASE("canonical models are members") {
  for (auto t : {make(1), make(2, {{1, 2}}, {{2, 2}}), no_double_one()}) {
    auto cls = compile_unary_class(t);
    for (int n = 1; n <= 3; ++n) {
      CHECK(run(canonical_A(n, t), cls, CheckMode::kFull).pass());
      CHECK(run(canonical_B(n, t), cls, CheckMode::kFull).pass());
    }
    // the disjoint union already violates (8)
    auto u = disjoint_union(canonical_A(1, t), canonical_B(1, t)).graph;
    auto r = run(u, cls, CheckMode::kPatterns);
    REQUIRE(r.verdict == Verdict::kFail);
    CHECK(r.violations.front().constraint == "c8");
    CHECK(run(u, cls, CheckMode::kSemantic).verdict == Verdict::kFail);
  }
}

TEST_CASE("small violations") {
  auto cls = compile_unary_class(make(1));
  ColoredGraph one(1);
  one.set_colors(0, {color::kO0, color::kG0});
  auto r = run(one, cls, CheckMode::kFull);
  REQUIRE(r.verdict == Verdict::kFail);
  CHECK(r.violations.front().constraint == "c1");

  // p -> q <- p' with both p, p' origins: 7 vertices
  ColoredGraph two(7);
  two.set_colors(0, {color::kO0});
  two.set_colors(1, {color::kO0});
  two.set_colors(2, {color::kPp0});
  for (VertexId base : {3u, 5u}) {
    two.set_colors(base, {color::kC1});
    two.set_colors(base + 1, {color::kC2});
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, 2);
  }
  two.add_edge(0, 3);
  two.add_edge(1, 5);
  r = run(two, cls, CheckMode::kPatterns);
  REQUIRE(r.verdict == Verdict::kFail);
  CHECK(r.violations.front().constraint == "c2");
  CHECK(run(two, cls, CheckMode::kSemantic).violations.front().constraint == "c2");
}

TEST_CASE("joint_embed_unary") {
  auto t1 = make(1);
  TilingMap ones = TilingMap::periodic(1, 1);
  ones.set(0, 0, 1);
  auto a = canonical_A(1, t1), b = canonical_B(1, t1);
  auto c = joint_embed_unary(a, b, ones, t1);
  CHECK(c.size() == a.size() + b.size());
  CHECK(c.edge_count() == a.edge_count() + b.edge_count() + 1);
  CanonicalLayout LB{1, 1};
  CHECK(c.adjacent(CanonicalLayout{1, 0}.grid(0, 0), static_cast<VertexId>(a.size() + LB.tile(0, 0, 1))));

  ColoredGraph x(2), y(3);
  x.set_colors(0, {color::kT1});
  y.set_colors(2, {color::kO1});
  auto d = joint_embed_unary(x, y, ones, t1);
  CHECK(d == disjoint_union(x, y).graph);

  ColoredGraph bad(1);
  bad.set_colors(0, {color::kO0, color::kO1});
  CHECK_THROWS_AS(joint_embed_unary(bad, b, ones, t1), std::invalid_argument);

  TilingMap empty = TilingMap::patch(1, 1);
  CHECK_THROWS_AS(joint_embed_unary(a, b, empty, t1), std::invalid_argument);
}

TEST_CASE("readout of a 2,2,1 bottom row") {
  auto t = no_double_one();
  auto theta = row_theta();
  REQUIRE(check_patch(t, theta).ok);
  auto c = joint_embed_unary(canonical_A(3, t), canonical_B(3, t), theta, t);
  auto patch = extract_tiling(c, 3, 2);
  CHECK(patch.at(0, 0) == 2);
  CHECK(patch.at(1, 0) == 2);
  CHECK(patch.at(2, 0) == 1);
  CHECK(patch == theta.window(3));
  CHECK(run(c, compile_unary_class(t), CheckMode::kFull).pass());

  auto none = extract_tiling(disjoint_union(canonical_A(2, t), canonical_B(2, t)).graph, 2, 2);
  CHECK(none == TilingMap::patch(2, 2));
}

TEST_CASE("round trip and membership of joint embeddings") {
  std::vector<std::pair<TilingProblem, TilingMap>> cases;
  for (auto t : {make(1), make(2, {{1, 1}, {2, 2}}), make(2, {{1, 2}}, {{2, 2}}), no_double_one()}) {
    auto theta = solve_periodic(t, 3);
    REQUIRE(theta);
    cases.emplace_back(t, *theta);
  }
  cases.emplace_back(no_double_one(), row_theta());
  for (const auto& [t, theta] : cases) {
    auto cls = compile_unary_class(t);
    for (int n = 1; n <= 3; ++n) {
      auto c = joint_embed_unary(canonical_A(n, t), canonical_B(n, t), theta, t);
      CHECK(extract_tiling(c, n, t.tile_count) == theta.window(n));
      CHECK(run(c, cls, CheckMode::kFull).pass());
      // joint embedding of unequal depths
      auto d = joint_embed_unary(canonical_A(n, t), canonical_B(4 - n, t), theta, t);
      CHECK(run(d, cls, CheckMode::kFull).pass());
    }
  }
}

TEST_CASE("pattern and semantic verdicts agree per constraint") {
  std::mt19937_64 rng(101);
  auto t = make(2, {{1, 2}}, {{2, 1}});
  auto cls = compile_unary_class(t);
  std::map<std::string, int> fired;
  for (int iter = 0; iter < 400; ++iter) {
    auto g = unary_sample(rng, t, iter % 2 ? 14 : 60);
    for (const auto& id : cls.constraint_ids()) {
      auto p = run(g, cls, CheckMode::kPatterns, {id});
      auto s = run(g, cls, CheckMode::kSemantic, {id});
      CHECK_MESSAGE(p.verdict == s.verdict, id, " iteration ", iter);
      fired[id] += p.verdict == Verdict::kFail;
    }
  }
  // every constraint is exercised by the sample
  for (const auto& id : cls.constraint_ids()) CHECK_MESSAGE(fired[id] > 0, id);
}

TEST_CASE("procedure and readout soundness on random members") {
  std::mt19937_64 rng(7);
  for (auto t : {make(2, {{1, 1}, {2, 2}}), make(2, {{1, 2}}, {{2, 2}})}) {
    auto cls = compile_unary_class(t);
    auto theta = solve_periodic(t, 3);
    REQUIRE(theta);
    for (int iter = 0; iter < 25; ++iter) {
      auto a = repair_to_member(rng, unary_sample(rng, t, 30), cls);
      auto b = repair_to_member(rng, unary_sample(rng, t, 30), cls);
      CHECK_NOTHROW(coordinates(a));
      auto c = joint_embed_unary(a, b, *theta, t);
      CHECK(run(c, cls, CheckMode::kFull).pass());
      CHECK(check_patch(t, extract_tiling(c, 3, t.tile_count)).ok);
      CHECK(check_patch(t, extract_tiling(a, 3, t.tile_count)).ok);
    }
  }
}
