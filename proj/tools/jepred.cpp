// jepred: command-line front end.
// Exit codes: 0 pass/found, 1 fail/none, 2 indeterminate, 3 usage error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "jep/bundle.hpp"
#include "jep/encoding.hpp"
#include "jep/harness.hpp"
#include "jep/io.hpp"
#include "jep/unary.hpp"

using namespace jep;

namespace {

constexpr int kPass = 0, kFailExit = 1, kIndeterminate = 2, kUsage = 3;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::kPass: return kPass;
    case Verdict::kFail: return kFailExit;
    case Verdict::kIndeterminate: return kIndeterminate;
  }
  return kUsage;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") std::cout << content;
  else write_file_atomic(out_path, content);
}

TilingProblem load_problem(const std::string& path) { return parse_tiling_problem(read_file(path)); }
ColoredGraph load_graph(const std::string& path) { return parse_graph(read_file(path)).graph; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint embedding reductions: compile, check and run tiling-encoded graph classes"};
  app.require_subcommand(1);

  std::string stage_name = "unary", spec, out, bundle_dir, graph_path, a_path, b_path, theta_path;
  std::string side = "A", mode = "patterns", report_path;
  int depth = 1, n = 1, max_period = 6;
  std::uint64_t budget = kDefaultBudget;
  std::size_t per_source = 1;
  bool no_check = false, all = false;

  auto add_stage = [&](CLI::App* sub) {
    sub->add_option("--stage", stage_name, "unary, pure or jhp")
        ->check(CLI::IsMember({"unary", "pure", "jhp"}));
  };
  auto add_budget = [&](CLI::App* sub) { sub->add_option("--budget", budget, "search step budget"); };

  auto* compile = app.add_subcommand("compile", "tiling problem -> class bundle");
  add_stage(compile);
  compile->add_option("spec", spec, "tiling problem file")->required();
  compile->add_option("-o,--out", out, "bundle directory")->required();

  auto* canon = app.add_subcommand("canon", "emit a canonical truncation");
  add_stage(canon);
  canon->add_option("--depth", depth, "truncation depth")->required()->check(CLI::PositiveNumber);
  canon->add_option("--side", side, "A or B")->check(CLI::IsMember({"A", "B"}));
  canon->add_option("spec", spec, "tiling problem file")->required();
  canon->add_option("-o,--out", out, "output graph file (default stdout)");

  auto* joint = app.add_subcommand("jointembed", "run the stage's joint-embedding procedure");
  add_stage(joint);
  add_budget(joint);
  joint->add_option("spec", spec, "tiling problem file")->required();
  joint->add_option("a", a_path, "first graph")->required();
  joint->add_option("b", b_path, "second graph")->required();
  joint->add_option("theta", theta_path, "tiling map file")->required();
  joint->add_option("-o,--out", out, "output graph file (default stdout)");
  joint->add_flag("--no-check", no_check, "skip the input membership check");

  auto* check = app.add_subcommand("check", "membership and violation report");
  add_budget(check);
  check->add_option("bundle", bundle_dir, "class bundle directory")->required();
  check->add_option("graph", graph_path, "graph file")->required();
  check->add_option("--mode", mode, "full, patterns or semantic")
      ->check(CLI::IsMember({"full", "patterns", "semantic"}));
  check->add_flag("--all", all, "report every violated pattern or rule, not just the first");
  check->add_option("--per-source", per_source, "witnesses per pattern or rule");

  auto* tiling = app.add_subcommand("tiling", "tiling oracles");
  tiling->require_subcommand(1);
  auto* solve = tiling->add_subcommand("solve", "bounded n x n patch search");
  solve->add_option("--n", n, "patch size")->required()->check(CLI::PositiveNumber);
  solve->add_option("spec", spec, "tiling problem file")->required();
  solve->add_option("-o,--out", out, "solution file (default stdout)");
  add_budget(solve);
  auto* periodic = tiling->add_subcommand("periodic", "periodic solution search");
  periodic->add_option("--max-period", max_period, "largest period tried")->check(CLI::PositiveNumber);
  periodic->add_option("spec", spec, "tiling problem file")->required();
  periodic->add_option("-o,--out", out, "solution file (default stdout)");
  add_budget(periodic);

  auto* experiment = app.add_subcommand("experiment", "end-to-end YES/NO runs");
  experiment->require_subcommand(1);
  auto* yes = experiment->add_subcommand("yes", "joint embedding from a periodic solution");
  auto* no = experiment->add_subcommand("no", "refutation at a depth with no patch");
  for (auto* sub : {yes, no}) {
    sub->add_option("--depth", depth, "truncation depth")->required()->check(CLI::PositiveNumber);
    sub->add_option("spec", spec, "tiling problem file")->required();
    sub->add_option("--report", report_path, "JSON report file");
    add_budget(sub);
  }
  add_stage(yes);
  yes->add_option("--max-period", max_period, "largest period tried")->check(CLI::PositiveNumber);

  auto* extract = app.add_subcommand("extract", "tiling readout of a joint embedding");
  add_stage(extract);
  extract->add_option("--depth", depth, "window size")->required()->check(CLI::PositiveNumber);
  extract->add_option("spec", spec, "tiling problem file")->required();
  extract->add_option("graph", graph_path, "graph file")->required();
  extract->add_option("-o,--out", out, "tiling map file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Stage stage = parse_stage(stage_name);

    if (*compile) {
      write_bundle(out, load_problem(spec), stage);
      std::cout << "wrote " << out << '\n';
      return kPass;
    }

    if (*canon) {
      auto t = load_problem(spec);
      auto g = stage_canonical(t, stage, depth, side == "B");
      emit(out, format_graph(g, side + "*" + std::to_string(depth) + "-" + stage_name));
      return kPass;
    }

    if (*joint) {
      auto t = load_problem(spec);
      auto a = load_graph(a_path), b = load_graph(b_path);
      auto theta = parse_tiling_map(read_file(theta_path));
      if (!no_check) {
        auto cls = compile_stage_class(t, stage);
        CheckOptions co;
        co.budget = budget;
        co.first_only = true;
        for (auto [name, g] : {std::pair{"a", &a}, std::pair{"b", &b}}) {
          auto r = check_constraints(*g, cls, co);
          if (r.verdict != Verdict::kPass) {
            std::cerr << "input " << name << ": " << to_string(r.verdict);
            if (!r.violations.empty())
              std::cerr << ": " << format_violation(r.violations.front(), cls.palette, *g);
            std::cerr << '\n';
            return exit_for(r.verdict);
          }
        }
      }
      emit(out, format_graph(stage_joint_embed(t, stage, a, b, theta), "joint"));
      return kPass;
    }

    if (*check) {
      auto bundle = read_bundle(bundle_dir);
      auto g = load_graph(graph_path);
      CheckOptions co;
      co.budget = budget;
      co.first_only = !all;
      co.per_source = per_source;
      co.mode = mode == "full" ? CheckMode::kFull
                               : mode == "semantic" ? CheckMode::kSemantic : CheckMode::kPatterns;
      auto r = check_constraints(g, bundle.cls, co);
      std::cout << "verdict: " << to_string(r.verdict) << '\n';
      for (const auto& v : r.violations)
        std::cout << "violation: " << format_violation(v, bundle.cls.palette, g) << '\n';
      for (const auto& e : r.exhausted) std::cout << "exhausted: " << e << '\n';
      return exit_for(r.verdict);
    }

    if (*solve) {
      auto sol = solve_bounded(load_problem(spec), n, budget);
      if (!sol) {
        std::cout << "none\n";
        return kFailExit;
      }
      emit(out, format_tiling_map(*sol));
      return kPass;
    }

    if (*periodic) {
      auto sol = solve_periodic(load_problem(spec), max_period, budget);
      if (!sol) {
        std::cout << "none\n";
        return kFailExit;
      }
      emit(out, format_tiling_map(*sol));
      return kPass;
    }

    if (*yes || *no) {
      auto t = load_problem(spec);
      ExperimentOptions eo;
      eo.budget = budget;
      eo.max_period = max_period;
      auto report = *yes ? run_yes_experiment(t, depth, stage, eo) : run_no_experiment(t, depth, eo);
      std::cout << report.to_text();
      if (!report_path.empty()) write_file_atomic(report_path, report.to_json());
      return exit_for(report.verdict);
    }

    if (*extract) {
      auto t = load_problem(spec);
      auto m = stage_extract(t, stage, load_graph(graph_path), depth);
      emit(out, format_tiling_map(m));
      auto pc = check_patch(t, m);
      bool complete = true;
      for (int y = 0; y < depth; ++y)
        for (int x = 0; x < depth; ++x) complete &= m.at(x, y) != 0;
      if (!complete) std::cerr << "readout incomplete\n";
      for (const auto& v : pc.violations) std::cerr << "violation: " << v.describe() << '\n';
      return pc.ok && complete ? kPass : kFailExit;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailExit;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
