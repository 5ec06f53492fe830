#include "jep/bundle.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>

#include "jep/encoding.hpp"
#include "jep/io.hpp"
#include "jep/unary.hpp"

namespace jep {

namespace {

namespace fs = std::filesystem;

std::string file_name(std::size_t index, const std::string& name) {
  std::string safe;
  for (char c : name) safe += std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ? c : '_';
  std::ostringstream out;
  out << index << '-' << safe << ".pat";
  return out.str();
}

std::string encoding_toml(const EncodingScheme& s) {
  std::ostringstream out;
  out << "[scheme]\n"
      << "colors = " << s.k << "\n"
      << "dummy = " << s.dummy() << "\n"
      << "basepoint = \"hub\"\n\n"
      << "[wheels]\n";
  for (ColorId c = 1; c <= s.k; ++c) out << c << " = \"W" << EncodingScheme::rim_size(c) << "\"\n";
  return out.str();
}

void write_class(const fs::path& dir, const TilingProblem& t, const std::string& stage,
                 const HereditaryClass& cls) {
  fs::create_directories(dir / "patterns");
  std::ostringstream manifest;
  manifest << "class " << cls.name << '\n'
           << "stage " << stage << '\n'
           << "palette " << cls.palette.size << " dummy=" << cls.palette.dummy
           << " c5=" << (cls.palette.has_c5 ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < cls.patterns.size(); ++i) {
    const auto& cp = cls.patterns[i];
    auto rel = fs::path("patterns") / file_name(i, cp.pattern.name);
    write_file_atomic(dir / rel, format_pattern(cp.pattern));
    manifest << "pattern " << cp.constraint << ' ' << rel.generic_string() << '\n';
  }
  for (const auto& r : cls.rules) manifest << "semantic: " << r.manifest << '\n';
  write_file_atomic(dir / "tiling.txt", format_tiling_problem(t));
  if (stage != "unary" && stage != "colored")
    write_file_atomic(dir / "encoding.toml", encoding_toml(EncodingScheme::for_palette(cls.palette)));
  write_file_atomic(dir / "manifest.txt", manifest.str());
}

HereditaryClass reference_class(const std::string& stage, const TilingProblem& t, const Palette& p) {
  if (stage == "unary") return compile_unary_class(t, p);
  if (stage == "colored") return compile_colored_class(t, p);
  if (stage == "pure") return compile_pure_class(t, p);
  if (stage == "jhp") return compile_jhp_class(t, p);
  throw ParseError("unknown stage '" + stage + "'");
}

}  // namespace

void write_bundle(const fs::path& dir, const TilingProblem& t, Stage stage) {
  auto cls = compile_stage_class(t, stage);
  write_class(dir, t, to_string(stage), cls);
  if (stage != Stage::kUnary)
    write_class(dir / "colored", t, "colored", compile_colored_class(t, stage_palette(stage)));
}

Bundle read_bundle(const fs::path& dir) {
  Bundle out;
  out.problem = parse_tiling_problem(read_file(dir / "tiling.txt"));
  std::istringstream in(read_file(dir / "manifest.txt"));
  std::string line;
  std::vector<std::string> semantic;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      return ParseError("manifest line " + std::to_string(lineno) + ": " + why);
    };
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("semantic: ", 0) == 0) {
      semantic.push_back(line.substr(10));
      continue;
    }
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "class") {
      ls >> out.cls.name;
    } else if (kind == "stage") {
      ls >> out.stage;
    } else if (kind == "palette") {
      std::string dummy, c5;
      if (!(ls >> out.cls.palette.size >> dummy >> c5) || dummy.rfind("dummy=", 0) != 0 ||
          c5.rfind("c5=", 0) != 0)
        throw fail("expected 'palette <k> dummy=<d> c5=<0|1>'");
      out.cls.palette.dummy = std::stoi(dummy.substr(6));
      out.cls.palette.has_c5 = c5.substr(3) == "1";
    } else if (kind == "pattern") {
      std::string constraint, file;
      if (!(ls >> constraint >> file)) throw fail("expected 'pattern <constraint> <file>'");
      out.cls.patterns.push_back({constraint, parse_pattern(read_file(dir / file))});
    } else {
      throw fail("unknown line kind '" + kind + "'");
    }
  }
  if (out.stage.empty()) throw ParseError("manifest has no stage line");
  if (semantic.empty()) return out;

  auto ref = reference_class(out.stage, out.problem, out.cls.palette);
  std::map<std::string, SemanticRule> by_manifest;
  for (auto& r : ref.rules) by_manifest.emplace(r.manifest, std::move(r));
  for (const auto& s : semantic) {
    if (s == "vee-lift colored/") {
      auto colored = std::make_shared<HereditaryClass>(read_bundle(dir / "colored").cls);
      out.cls.rules.push_back(vee_lift_rule(colored, EncodingScheme::for_palette(out.cls.palette)));
      continue;
    }
    auto it = by_manifest.find(s);
    if (it == by_manifest.end()) throw ParseError("unknown semantic rule '" + s + "'");
    out.cls.rules.push_back(it->second);
  }
  return out;
}

}  // namespace jep
