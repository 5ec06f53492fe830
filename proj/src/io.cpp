#include "jep/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace jep {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

std::string sanitize(const std::string& name) {
  std::string out = name.empty() ? "unnamed" : name;
  std::replace_if(out.begin(), out.end(), [](char c) { return c == ' ' || c == '\t'; }, '_');
  return out;
}

struct Parsed {
  std::string kind;
  std::string name;
  ColoredGraph graph;
  std::vector<Edge> forbidden;
  std::vector<Edge> distinct;
  bool injective = true;
};

Parsed parse_any(std::istream& in, bool allow_pattern_lines) {
  Parsed out;
  std::map<long long, VertexId> ids;
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;

  auto lookup = [&](long long id, std::size_t ln) {
    auto it = ids.find(id);
    if (it == ids.end()) fail(ln, "unknown vertex id " + std::to_string(id));
    return it->second;
  };
  auto read_pair = [&](std::istringstream& ls, std::size_t ln) {
    long long a = -1, b = -1;
    if (!(ls >> a >> b)) fail(ln, "expected two vertex ids");
    return Edge(lookup(a, ln), lookup(b, ln));
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!header) {
      if (tag != "graph" && tag != "pattern") fail(line_no, "expected 'graph' or 'pattern' header");
      if (tag == "pattern" && !allow_pattern_lines) fail(line_no, "pattern header in a graph file");
      out.kind = tag;
      if (!(ls >> out.name)) fail(line_no, "missing name");
      std::string pal;
      if (ls >> pal) {
        if (pal.rfind("palette=", 0) != 0) fail(line_no, "expected palette=<k>");
        try {
          out.graph.set_palette_size(std::stoi(pal.substr(8)));
        } catch (const std::exception&) {
          fail(line_no, "bad palette size");
        }
      }
      header = true;
      continue;
    }
    if (tag == "v") {
      long long id = -1;
      if (!(ls >> id) || id < 0) fail(line_no, "expected vertex id");
      if (ids.count(id)) fail(line_no, "duplicate vertex id " + std::to_string(id));
      std::string rest;
      std::getline(ls, rest);
      rest.erase(std::remove_if(rest.begin(), rest.end(),
                                [](char c) { return c == '[' || c == ']' || c == ' ' || c == '\t'; }),
                 rest.end());
      ColorSet colors;
      if (!rest.empty()) {
        if (rest.rfind("colors:", 0) != 0) fail(line_no, "expected 'colors:' clause");
        std::istringstream cs(rest.substr(7));
        std::string tok;
        while (std::getline(cs, tok, ',')) {
          if (tok.empty()) continue;
          int c = 0;
          try {
            c = std::stoi(tok);
          } catch (const std::exception&) {
            fail(line_no, "bad color '" + tok + "'");
          }
          if (c < 1 || c > kMaxColors) fail(line_no, "color out of range");
          if (out.graph.palette_size() > 0 && c > out.graph.palette_size())
            fail(line_no, "color " + std::to_string(c) + " outside palette");
          colors.insert(c);
        }
      }
      ids[id] = out.graph.add_vertex(colors);
    } else if (tag == "e") {
      Edge e = read_pair(ls, line_no);
      if (e.first == e.second) fail(line_no, "loop edge");
      if (!out.graph.add_edge(e.first, e.second)) fail(line_no, "duplicate edge");
    } else if (allow_pattern_lines && tag == "f") {
      Edge e = read_pair(ls, line_no);
      if (e.first == e.second) fail(line_no, "loop in forbidden pair");
      out.forbidden.push_back(e);
    } else if (allow_pattern_lines && tag == "d") {
      out.distinct.push_back(read_pair(ls, line_no));
    } else if (allow_pattern_lines && tag == "mode") {
      std::string m;
      ls >> m;
      if (m == "injective") out.injective = true;
      else if (m == "quotient") out.injective = false;
      else fail(line_no, "unknown mode '" + m + "'");
    } else {
      fail(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw ParseError("empty input: missing header");
  return out;
}

}  // namespace

NamedGraph parse_graph(std::istream& in) {
  Parsed p = parse_any(in, false);
  return {p.name, std::move(p.graph)};
}

NamedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const ColoredGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << sanitize(name) << " palette=" << g.palette_size() << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    out << "v " << v;
    auto ids = g.colors(v).ids();
    if (!ids.empty()) {
      out << " colors: ";
      for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
    }
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.first << ' ' << e.second << '\n';
  return out.str();
}

ConstraintPattern parse_pattern(std::istream& in) {
  Parsed p = parse_any(in, true);
  ConstraintPattern out{p.name, std::move(p.graph), std::move(p.forbidden), p.injective,
                        std::move(p.distinct)};
  try {
    validate(out);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

ConstraintPattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern(in);
}

std::string format_pattern(const ConstraintPattern& p) {
  std::string body = format_graph(p.graph, p.name);
  std::ostringstream out;
  out << "pattern" << body.substr(body.find(' '));
  out << "mode " << (p.injective ? "injective" : "quotient") << '\n';
  for (const Edge& e : p.forbidden) out << "f " << e.first << ' ' << e.second << '\n';
  if (!p.injective)
    for (const Edge& e : p.distinct) out << "d " << e.first << ' ' << e.second << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace jep
