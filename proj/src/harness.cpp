#include "jep/harness.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "jep/encoding.hpp"
#include "jep/unary.hpp"

namespace jep {

namespace {

Verdict member_verdict(const ColoredGraph& g, const HereditaryClass& cls, std::uint64_t budget,
                       CheckMode mode, std::string* why = nullptr) {
  CheckOptions co;
  co.budget = budget;
  co.first_only = true;
  co.mode = mode;
  auto r = check_constraints(g, cls, co);
  if (why && r.verdict == Verdict::kFail) *why = format_violation(r.violations.front(), cls.palette, g);
  if (why && r.verdict == Verdict::kIndeterminate) *why = "undecided: " + r.exhausted.front();
  return r.verdict;
}

}  // namespace

WitnessResult jep_witness_search(const ColoredGraph& a, const ColoredGraph& b,
                                 const HereditaryClass& cls, const WitnessOptions& opts) {
  WitnessResult out;
  for (const ColoredGraph* f : {&a, &b}) {
    std::string why;
    auto v = member_verdict(*f, cls, opts.budget, CheckMode::kPatterns, &why);
    if (v != Verdict::kPass) {
      out.verdict = v;
      out.detail = "input not a member: " + why;
      return out;
    }
  }
  const std::size_t na = a.size(), nb = b.size();
  std::vector<int> match(na, -1);
  std::vector<bool> used(nb, false);
  bool undecided = false;
  bool stop = false;

  // Membership of the candidate restricted to `keep`; sets `undecided` on
  // budget trouble.
  auto accept = [&](const ColoredGraph& c, const std::vector<VertexId>& keep) {
    if (++out.candidates > opts.max_candidates) {
      undecided = stop = true;
      return false;
    }
    auto sub = induced_subgraph(c, keep);
    auto v = member_verdict(sub.graph, cls, opts.budget, CheckMode::kPatterns);
    if (v == Verdict::kIndeterminate) undecided = true;
    return v == Verdict::kPass;
  };

  auto try_matching = [&] {
    // Witness ids: b-vertices first, then unmatched a-vertices.
    ColoredGraph c = b;
    std::vector<VertexId> left(na);
    std::vector<VertexId> free_a;
    for (VertexId x = 0; x < na; ++x) {
      if (match[x] >= 0) {
        left[x] = static_cast<VertexId>(match[x]);
      } else {
        left[x] = c.add_vertex(a.colors(x));
        free_a.push_back(x);
      }
    }
    c.set_palette_size(std::max(a.palette_size(), b.palette_size()));
    for (const Edge& e : a.edges()) c.add_edge(left[e.first], left[e.second]);
    std::vector<VertexId> free_b;
    for (VertexId y = 0; y < nb; ++y)
      if (!used[y]) free_b.push_back(y);
    if (free_b.size() > 20) throw std::invalid_argument("witness search: too many cross pairs");

    std::vector<VertexId> decided(nb);
    for (VertexId y = 0; y < nb; ++y) decided[y] = y;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (stop) return false;
      if (i == free_a.size()) {
        out.witness = c;
        out.left = left;
        out.right.resize(nb);
        for (VertexId y = 0; y < nb; ++y) out.right[y] = y;
        return true;
      }
      VertexId u = left[free_a[i]];
      decided.push_back(u);
      for (std::uint32_t mask = 0; mask < (1u << free_b.size()); ++mask) {
        for (std::size_t j = 0; j < free_b.size(); ++j)
          if (mask >> j & 1) c.add_edge(u, free_b[j]);
        bool ok = accept(c, decided) && rec(i + 1);
        for (std::size_t j = 0; j < free_b.size(); ++j)
          if (mask >> j & 1) c.remove_edge(u, free_b[j]);
        if (ok) return true;
        if (stop) break;
      }
      decided.pop_back();
      return false;
    };
    if (free_a.empty()) return accept(c, decided) && rec(0);
    return rec(0);
  };

  std::function<bool(VertexId)> rec_match = [&](VertexId x) -> bool {
    if (stop) return false;
    if (x == na) return try_matching();
    match[x] = -1;
    if (rec_match(x + 1)) return true;
    for (VertexId y = 0; y < nb; ++y) {
      if (used[y] || a.colors(x) != b.colors(y)) continue;
      bool ok = true;
      for (VertexId x2 = 0; x2 < x && ok; ++x2)
        if (match[x2] >= 0) ok = a.adjacent(x, x2) == b.adjacent(y, static_cast<VertexId>(match[x2]));
      if (!ok) continue;
      match[x] = static_cast<int>(y);
      used[y] = true;
      bool found = rec_match(x + 1);
      used[y] = false;
      match[x] = -1;
      if (found) return true;
    }
    return false;
  };

  if (rec_match(0)) {
    out.verdict = Verdict::kPass;
    out.detail = "witness on " + std::to_string(out.witness.size()) + " vertices";
  } else if (undecided) {
    out.verdict = Verdict::kIndeterminate;
    out.detail = "search cut off after " + std::to_string(out.candidates) + " candidates";
  } else {
    out.verdict = Verdict::kFail;
    out.detail = "no witness among " + std::to_string(out.candidates) + " candidates";
  }
  return out;
}

std::optional<TwoRelationStructure> jhp_witness_search(const TwoRelationStructure& a,
                                                       const TwoRelationStructure& b,
                                                       const TwoRelationClass& cls) {
  if (!is_member(a, cls) || !is_member(b, cls)) return std::nullopt;
  const std::size_t max = a.size + b.size;
  for (std::size_t m = 1; m <= max; ++m) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < m; ++u)
      for (VertexId v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
    if (pairs.size() > 15) throw std::invalid_argument("jhp_witness_search: instance too large");
    const std::uint32_t full = 1u << pairs.size();
    for (std::uint32_t em = 0; em < full; ++em)
      for (std::uint32_t nm = 0; nm < full; ++nm) {
        // Structures with a pair in both relations or in neither contain a
        // sanity pattern; skip building them.
        if ((em & nm) || (em | nm) != full - 1) continue;
        TwoRelationStructure c{"witness", m, {}, {}};
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (em >> i & 1) c.e.insert(pairs[i]);
          if (nm >> i & 1) c.n.insert(pairs[i]);
        }
        if (!is_member(c, cls)) continue;
        if (find_homomorphism(a, c) && find_homomorphism(b, c)) return c;
      }
  }
  return std::nullopt;
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::kUnary: return "unary";
    case Stage::kPure: return "pure";
    case Stage::kJhp: return "jhp";
  }
  return "?";
}

Stage parse_stage(const std::string& s) {
  if (s == "unary") return Stage::kUnary;
  if (s == "pure") return Stage::kPure;
  if (s == "jhp") return Stage::kJhp;
  throw std::invalid_argument("unknown stage '" + s + "'");
}

Palette stage_palette(Stage s) {
  switch (s) {
    case Stage::kUnary: return kUnaryPalette;
    case Stage::kPure: return kPurePalette;
    case Stage::kJhp: return kJhpPalette;
  }
  return kUnaryPalette;
}

HereditaryClass compile_stage_class(const TilingProblem& t, Stage s) {
  switch (s) {
    case Stage::kUnary: return compile_unary_class(t);
    case Stage::kPure: return compile_pure_class(t);
    case Stage::kJhp: return compile_jhp_class(t);
  }
  return {};
}

ColoredGraph stage_canonical(const TilingProblem& t, Stage s, int n, bool b_side) {
  auto base = b_side ? canonical_B(n, t) : canonical_A(n, t);
  auto scheme = EncodingScheme::for_palette(stage_palette(s));
  switch (s) {
    case Stage::kUnary: return base;
    case Stage::kPure: return wedge(base, scheme);
    case Stage::kJhp: return wedge(augment(base).graph, scheme);
  }
  return base;
}

ColoredGraph stage_joint_embed(const TilingProblem& t, Stage s, const ColoredGraph& a,
                               const ColoredGraph& b, const TilingMap& theta) {
  if (s == Stage::kUnary) {
    JointEmbedOptions jo;
    jo.check_inputs = false;
    return joint_embed_unary(a, b, theta, t, jo);
  }
  PureJointEmbedOptions po;
  po.check_inputs = false;
  po.palette = stage_palette(s);
  return complete_and_joint_embed_pure(a, b, t, theta, po);
}

TilingMap stage_extract(const TilingProblem& t, Stage s, const ColoredGraph& c, int n) {
  if (s == Stage::kUnary) return extract_tiling(c, n, t.tile_count);
  return extract_tiling(vee(c, EncodingScheme::for_palette(stage_palette(s))), n, t.tile_count);
}

namespace {

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& ch : s)
    if (ch == '\n') ch = ';';
  return s;
}

// Combines step verdicts: any fail wins, then any indeterminate.
void fold(Verdict& acc, Verdict v) {
  if (acc == Verdict::kFail || v == Verdict::kFail) acc = Verdict::kFail;
  else if (v == Verdict::kIndeterminate) acc = Verdict::kIndeterminate;
}

}  // namespace

std::string ExperimentReport::to_text() const {
  std::ostringstream out;
  out << "experiment: " << kind << '\n'
      << "instance: " << one_line(instance) << '\n'
      << "stage: " << stage << '\n'
      << "depth: " << depth << '\n'
      << "periodic oracle: " << periodic_oracle << '\n'
      << "bounded oracle: " << bounded_oracle << '\n';
  if (!theta.empty()) out << "theta: " << one_line(theta) << '\n';
  if (!joint_embedding.empty()) out << "joint embedding: " << joint_embedding << '\n';
  for (const auto& [k, v] : membership) out << "membership " << k << ": " << v << '\n';
  for (const auto& v : violations) out << "violation: " << v << '\n';
  if (!extracted.empty()) out << "extracted: " << one_line(extracted) << '\n';
  if (!refutation.empty()) out << "refutation: " << refutation << '\n';
  for (const auto& n : notes) out << "note: " << n << '\n';
  out << "verdict: " << jep::to_string(verdict) << '\n';
  out << "seconds: " << seconds << '\n';
  return out.str();
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["instance"] = instance;
  j["stage"] = stage;
  j["depth"] = depth;
  j["oracle"] = {{"periodic", periodic_oracle}, {"bounded", bounded_oracle}};
  j["theta"] = theta;
  j["joint_embedding"] = joint_embedding;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : membership) m[k] = v;
  j["membership"] = m;
  j["violations"] = violations;
  j["extracted"] = extracted;
  j["refutation"] = refutation;
  j["notes"] = notes;
  j["verdict"] = jep::to_string(verdict);
  j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

ExperimentReport run_yes_experiment(const TilingProblem& t, int n, Stage stage,
                                    const ExperimentOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.kind = "yes";
  r.instance = format_tiling_problem(t);
  r.stage = to_string(stage);
  r.depth = n;
  r.bounded_oracle = "skipped";
  auto finish = [&] {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  std::optional<TilingMap> theta;
  try {
    theta = solve_periodic(t, opts.max_period, opts.budget);
  } catch (const BudgetExceeded&) {
    r.periodic_oracle = "indeterminate";
    r.verdict = Verdict::kIndeterminate;
    return finish();
  }
  if (!theta) {
    r.periodic_oracle = "none";
    r.notes.push_back("precondition fails: no periodic solution with period <= " +
                      std::to_string(opts.max_period));
    r.verdict = Verdict::kIndeterminate;
    return finish();
  }
  r.periodic_oracle = "found";
  r.theta = format_tiling_map(*theta);

  Verdict acc = Verdict::kPass;
  auto cls = compile_stage_class(t, stage);
  auto a = stage_canonical(t, stage, n, false);
  auto b = stage_canonical(t, stage, n, true);
  for (auto [name, g] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
    std::string why;
    auto v = member_verdict(*g, cls, opts.budget, CheckMode::kFull, &why);
    r.membership.push_back({name, jep::to_string(v)});
    if (!why.empty()) r.violations.push_back(std::string(name) + ": " + why);
    fold(acc, v);
  }

  ColoredGraph c;
  try {
    c = stage_joint_embed(t, stage, a, b, *theta);
  } catch (const std::exception& e) {
    r.joint_embedding = std::string("error: ") + e.what();
    fold(acc, Verdict::kFail);
    r.verdict = acc;
    return finish();
  }
  r.joint_embedding = "ok: " + std::to_string(c.size()) + " vertices, " + std::to_string(c.edge_count()) + " edges";
  {
    std::string why;
    auto v = member_verdict(c, cls, opts.budget, CheckMode::kFull, &why);
    r.membership.push_back({"C", jep::to_string(v)});
    if (!why.empty()) r.violations.push_back("C: " + why);
    fold(acc, v);
  }
  if (stage != Stage::kUnary) {
    auto scheme = EncodingScheme::for_palette(stage_palette(stage));
    auto before = disjoint_union(complete_with_dummies(a, scheme), complete_with_dummies(b, scheme)).graph;
    auto hit = added_edges_in_triangles(before, c);
    r.membership.push_back({"C added edges in triangles", std::to_string(hit.size())});
    if (!hit.empty()) fold(acc, Verdict::kFail);
    if (stage == Stage::kPure) {
      auto stray = stray_triangles(c, scheme);
      r.membership.push_back({"C triangles outside wheels", std::to_string(stray.size())});
      if (!stray.empty()) fold(acc, Verdict::kFail);
    }
    auto k4 = find_k4(c);
    r.membership.push_back({"C K4", k4 ? "present" : "absent"});
    if (k4) fold(acc, Verdict::kFail);
  }
  auto got = stage_extract(t, stage, c, n);
  r.extracted = format_tiling_map(got);
  bool round_trip = got == theta->window(n);
  r.membership.push_back({"round trip", round_trip ? "exact" : "mismatch"});
  if (!round_trip) fold(acc, Verdict::kFail);
  r.verdict = acc;
  return finish();
}

ExperimentReport run_no_experiment(const TilingProblem& t, int n, const ExperimentOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.kind = "no";
  r.instance = format_tiling_problem(t);
  r.stage = "unary";
  r.depth = n;
  r.periodic_oracle = "skipped";
  auto finish = [&] {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  std::optional<TilingMap> patch;
  try {
    patch = solve_bounded(t, n, opts.budget);
  } catch (const BudgetExceeded&) {
    r.bounded_oracle = "indeterminate";
    r.verdict = Verdict::kIndeterminate;
    return finish();
  }
  if (patch) {
    r.bounded_oracle = "found";
    r.theta = format_tiling_map(*patch);
    r.notes.push_back("precondition fails: an n x n patch exists, so the instance is not refutable at this depth");
    r.verdict = Verdict::kFail;
    return finish();
  }
  r.bounded_oracle = "none";

  auto cls = compile_unary_class(t);
  auto a = canonical_A(n, t), b = canonical_B(n, t);
  if (a.size() + b.size() <= opts.search_limit) {
    auto w = jep_witness_search(a, b, cls, opts.witness);
    r.joint_embedding = "witness search: " + w.detail;
    if (w.verdict == Verdict::kFail) {
      r.refutation = "exhaustive witness search";
      r.verdict = Verdict::kPass;
      return finish();
    }
    if (w.verdict == Verdict::kPass) {
      r.notes.push_back("witness found although no n x n patch exists");
      r.verdict = Verdict::kFail;
      return finish();
    }
  }
  r.refutation =
      "readout: a witness C would give extract_tiling(C, n) with no violated rule, "
      "but no n x n patch exists";
  r.verdict = Verdict::kPass;
  return finish();
}

}  // namespace jep
