#include "jep/tiling.hpp"

#include <sstream>
#include <stdexcept>

#include "jep/io.hpp"

namespace jep {

void validate(const TilingProblem& t) {
  if (t.tile_count < 1) throw std::invalid_argument("tile count must be positive");
  auto in_range = [&](Tile x) { return x >= 1 && x <= t.tile_count; };
  for (const auto* rules : {&t.h_forbidden, &t.v_forbidden})
    for (auto [a, b] : *rules)
      if (!in_range(a) || !in_range(b)) throw std::invalid_argument("tiling rule out of range");
}

TilingMap::TilingMap(Kind kind, int w, int h) : kind_(kind), width_(w), height_(h) {
  if (w < 0 || h < 0 || (kind == Kind::kPeriodic && (w == 0 || h == 0)))
    throw std::invalid_argument("bad tiling map dimensions");
  cells_.assign(static_cast<std::size_t>(w) * h, 0);
}

TilingMap TilingMap::patch(int width, int height) { return {Kind::kPatch, width, height}; }
TilingMap TilingMap::periodic(int p, int q) { return {Kind::kPeriodic, p, q}; }

Tile TilingMap::at(int x, int y) const {
  if (x < 0 || y < 0) return 0;
  if (kind_ == Kind::kPeriodic) {
    x %= width_;
    y %= height_;
  } else if (x >= width_ || y >= height_) {
    return 0;
  }
  return cells_[static_cast<std::size_t>(y) * width_ + x];
}

void TilingMap::set(int x, int y, Tile tile) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_)
    throw std::out_of_range("tiling cell out of range");
  cells_[static_cast<std::size_t>(y) * width_ + x] = tile;
}

TilingMap TilingMap::window(int n) const {
  TilingMap out = patch(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) out.set(x, y, at(x, y));
  return out;
}

std::string TilingViolation::describe() const {
  std::ostringstream out;
  if (horizontal)
    out << "tile " << second << " at (" << x + 1 << "," << y << ") right of tile " << first
        << " at (" << x << "," << y << ")";
  else
    out << "tile " << second << " at (" << x << "," << y + 1 << ") above tile " << first
        << " at (" << x << "," << y << ")";
  return out.str();
}

PatchCheck check_patch(const TilingProblem& t, const TilingMap& m) {
  PatchCheck out;
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x) {
      Tile here = m.at(x, y);
      if (here == 0) continue;
      // periodic maps: at() wraps, so the domain's right/top edges see their
      // wrap-around neighbors
      Tile right = m.at(x + 1, y), up = m.at(x, y + 1);
      if (right != 0 && !t.h_ok(here, right)) out.violations.push_back({x, y, true, here, right});
      if (up != 0 && !t.v_ok(here, up)) out.violations.push_back({x, y, false, here, up});
    }
  out.ok = out.violations.empty();
  return out;
}

namespace {

// Row-major fill of a w x h grid; with wrap set, the last column/row must
// also agree with the first.
class GridSearch {
 public:
  GridSearch(const TilingProblem& t, int w, int h, bool wrap, std::uint64_t budget,
             std::uint64_t& spent)
      : t_(t), w_(w), h_(h), wrap_(wrap), budget_(budget), spent_(spent),
        grid_(static_cast<std::size_t>(w) * h, 0) {}

  bool run() { return fill(0); }
  Tile cell(int x, int y) const { return grid_[static_cast<std::size_t>(y) * w_ + x]; }

 private:
  bool fits(int x, int y, Tile k) const {
    if (x > 0 && !t_.h_ok(cell(x - 1, y), k)) return false;
    if (y > 0 && !t_.v_ok(cell(x, y - 1), k)) return false;
    if (wrap_) {
      // cell (x,y) already holds k, which covers period 1
      if (x == w_ - 1 && !t_.h_ok(k, cell(0, y))) return false;
      if (y == h_ - 1 && !t_.v_ok(k, cell(x, 0))) return false;
    }
    return true;
  }

  bool fill(std::size_t i) {
    if (i == grid_.size()) return true;
    int x = static_cast<int>(i % w_), y = static_cast<int>(i / w_);
    for (Tile k = 1; k <= t_.tile_count; ++k) {
      if (++spent_ > budget_) throw BudgetExceeded("tiling search budget exhausted");
      grid_[i] = k;
      if (!fits(x, y, k)) continue;
      if (fill(i + 1)) return true;
    }
    grid_[i] = 0;
    return false;
  }

  const TilingProblem& t_;
  int w_, h_;
  bool wrap_;
  std::uint64_t budget_;
  std::uint64_t& spent_;
  std::vector<Tile> grid_;
};

}  // namespace

std::optional<TilingMap> solve_bounded(const TilingProblem& t, int n, std::uint64_t budget) {
  validate(t);
  if (n < 1) throw std::invalid_argument("grid size must be positive");
  std::uint64_t spent = 0;
  GridSearch s(t, n, n, false, budget, spent);
  if (!s.run()) return std::nullopt;
  TilingMap out = TilingMap::patch(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) out.set(x, y, s.cell(x, y));
  return out;
}

std::optional<TilingMap> solve_periodic(const TilingProblem& t, int max_period,
                                        std::uint64_t budget) {
  validate(t);
  if (max_period < 1) throw std::invalid_argument("max period must be positive");
  std::vector<std::pair<int, int>> periods;
  for (int p = 1; p <= max_period; ++p)
    for (int q = 1; q <= max_period; ++q) periods.emplace_back(p, q);
  std::stable_sort(periods.begin(), periods.end(),
                   [](auto a, auto b) { return a.first * a.second < b.first * b.second; });
  std::uint64_t spent = 0;
  for (auto [p, q] : periods) {
    GridSearch s(t, p, q, true, budget, spent);
    if (!s.run()) continue;
    TilingMap out = TilingMap::periodic(p, q);
    for (int y = 0; y < q; ++y)
      for (int x = 0; x < p; ++x) out.set(x, y, s.cell(x, y));
    return out;
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
}

}  // namespace

TilingProblem parse_tiling_problem(const std::string& text) {
  TilingProblem t;
  bool header = false;
  for (const auto& toks : tokenize(text)) {
    if (toks[0] == "tiles" && toks.size() == 2 && !header) {
      t.tile_count = to_int(toks[1]);
      header = true;
    } else if ((toks[0] == "hnot" || toks[0] == "vnot") && toks.size() == 3 && header) {
      auto& rules = toks[0] == "hnot" ? t.h_forbidden : t.v_forbidden;
      rules.emplace(to_int(toks[1]), to_int(toks[2]));
    } else {
      throw ParseError("unexpected tiling spec line starting '" + toks[0] + "'");
    }
  }
  if (!header) throw ParseError("missing 'tiles <n>' line");
  try {
    validate(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return t;
}

std::string format_tiling_problem(const TilingProblem& t) {
  std::ostringstream out;
  out << "tiles " << t.tile_count << '\n';
  for (auto [l, k] : t.h_forbidden) out << "hnot " << l << ' ' << k << '\n';
  for (auto [j, i] : t.v_forbidden) out << "vnot " << j << ' ' << i << '\n';
  return out.str();
}

TilingMap parse_tiling_map(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].size() != 3 || (lines[0][0] != "patch" && lines[0][0] != "periodic"))
    throw ParseError("expected 'patch <w> <h>' or 'periodic <p> <q>' header");
  int w = to_int(lines[0][1]), h = to_int(lines[0][2]);
  bool periodic = lines[0][0] == "periodic";
  if (w < 0 || h < 0 || (periodic && (w == 0 || h == 0))) throw ParseError("bad dimensions");
  if (lines.size() != static_cast<std::size_t>(h) + 1)
    throw ParseError("expected " + std::to_string(h) + " rows");
  TilingMap m = periodic ? TilingMap::periodic(w, h) : TilingMap::patch(w, h);
  for (int y = 0; y < h; ++y) {
    const auto& row = lines[y + 1];
    if (row.size() != static_cast<std::size_t>(w)) throw ParseError("row width mismatch");
    for (int x = 0; x < w; ++x) {
      int tile = to_int(row[x]);
      if (tile < 0 || (periodic && tile == 0)) throw ParseError("bad tile entry");
      m.set(x, y, tile);
    }
  }
  return m;
}

std::string format_tiling_map(const TilingMap& m) {
  std::ostringstream out;
  out << (m.is_periodic() ? "periodic " : "patch ") << m.width() << ' ' << m.height() << '\n';
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) out << (x ? " " : "") << m.at(x, y);
    out << '\n';
  }
  return out.str();
}

}  // namespace jep
