#include "jep/hereditary_class.hpp"

#include <algorithm>
#include <sstream>

namespace jep {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

std::vector<std::string> HereditaryClass::constraint_ids() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& p : patterns) add(p.constraint);
  for (const auto& r : rules) add(r.constraint);
  return out;
}

CheckResult check_constraints(const ColoredGraph& g, const HereditaryClass& cls,
                              const CheckOptions& opts) {
  CheckResult out;
  auto wanted = [&](const std::string& id) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end();
  };
  auto done = [&] { return opts.first_only && !out.violations.empty(); };
  const std::size_t limit = opts.first_only ? 1 : std::max<std::size_t>(1, opts.per_source);

  if (opts.mode != CheckMode::kSemantic) {
    MatchOptions mo;
    mo.limit = limit;
    mo.budget = opts.budget;
    for (const auto& cp : cls.patterns) {
      if (done()) break;
      if (!wanted(cp.constraint)) continue;
      try {
        for (auto& m : match_pattern(cp.pattern, g, mo))
          out.violations.push_back({cp.constraint, cp.pattern.name, std::move(m), {}});
      } catch (const BudgetExceeded&) {
        out.exhausted.push_back(cp.pattern.name);
      }
    }
  }
  for (const auto& rule : cls.rules) {
    if (done()) break;
    if (!wanted(rule.constraint)) continue;
    if (opts.mode == CheckMode::kPatterns && rule.cross_check) continue;
    try {
      for (auto& v : rule.find(g, limit, opts.budget)) out.violations.push_back(std::move(v));
    } catch (const BudgetExceeded&) {
      out.exhausted.push_back(rule.name);
    }
  }
  if (!out.violations.empty()) out.verdict = Verdict::kFail;
  else if (!out.exhausted.empty()) out.verdict = Verdict::kIndeterminate;
  return out;
}

bool is_member(const ColoredGraph& g, const HereditaryClass& cls, std::uint64_t budget) {
  CheckOptions opts;
  opts.budget = budget;
  opts.first_only = true;
  auto r = check_constraints(g, cls, opts);
  if (r.verdict == Verdict::kIndeterminate)
    throw BudgetExceeded("membership undecided within budget: " + r.exhausted.front());
  return r.verdict == Verdict::kPass;
}

std::string format_violation(const Violation& v, const Palette& palette, const ColoredGraph& g) {
  std::ostringstream out;
  out << v.constraint << " [" << v.source << "]";
  if (!v.witness.empty()) {
    out << " witness:";
    for (VertexId w : v.witness) {
      out << ' ' << w;
      if (w < g.size()) {
        auto ids = g.colors(w).ids();
        if (!ids.empty()) {
          out << '(';
          for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << palette.name(ids[i]);
          out << ')';
        }
      }
    }
  }
  if (!v.detail.empty()) out << " -- " << v.detail;
  return out.str();
}

}  // namespace jep
