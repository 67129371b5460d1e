#include "casimir/graph_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace casimir {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

[[noreturn]] void syntax_error(int line_no, const std::string& msg) {
  fail(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Graph parse_graph_file(std::istream& in) {
  std::vector<VertexDecl> vertices;
  std::vector<BondDecl> bonds;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "vertex") {
      if (toks.size() != 3)
        syntax_error(line_no, "expected 'vertex <name> <kind>'");
      if (!valid_name(toks[1]))
        syntax_error(line_no, "bad vertex name '" + toks[1] + "'");
      BoundaryKind kind;
      if (toks[2] == "kirchhoff") kind = BoundaryKind::Kirchhoff;
      else if (toks[2] == "neumann") kind = BoundaryKind::Neumann;
      else if (toks[2] == "dirichlet") kind = BoundaryKind::Dirichlet;
      else syntax_error(line_no, "unknown boundary kind '" + toks[2] + "'");
      vertices.push_back(VertexDecl{toks[1], kind});
    } else if (toks[0] == "bond") {
      if (toks.size() != 5)
        syntax_error(line_no, "expected 'bond <name> <vertexA> <vertexB> <length>'");
      for (int k = 1; k <= 3; ++k)
        if (!valid_name(toks[k]))
          syntax_error(line_no, "bad name '" + toks[k] + "'");
      double length = 0.0;
      size_t pos = 0;
      try {
        length = std::stod(toks[4], &pos);
      } catch (const std::exception&) {
        syntax_error(line_no, "bad length '" + toks[4] + "'");
      }
      if (pos != toks[4].size())
        syntax_error(line_no, "bad length '" + toks[4] + "'");
      if (!(length > 0.0) || !std::isfinite(length))
        fail(ErrorCode::SemanticError,
             "line " + std::to_string(line_no) + ": bond '" + toks[1] +
                 "' has nonpositive length");
      bonds.push_back(BondDecl{toks[1], toks[2], toks[3], length});
    } else {
      syntax_error(line_no, "unknown directive '" + toks[0] + "'");
    }
  }

  Graph g = Graph::assemble(std::move(vertices), std::move(bonds));
  ValidationReport report = validate_graph(g);
  if (!report.ok())
    fail(ErrorCode::SemanticError,
         report.violations.front().subject + ": " +
             report.violations.front().message);
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream is(text);
  return parse_graph_file(is);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::SemanticError, "cannot open graph file '" + path + "'");
  return parse_graph_file(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  for (const Vertex& v : g.vertices())
    os << "vertex " << v.name << ' ' << boundary_kind_name(v.kind) << '\n';
  char buf[40];
  for (const Bond& b : g.bonds()) {
    std::snprintf(buf, sizeof(buf), "%.17g", b.length);
    os << "bond " << b.name << ' ' << g.vertices()[b.ends[0]].name << ' '
       << g.vertices()[b.ends[1]].name << ' ' << buf << '\n';
  }
  return os.str();
}

}  // namespace casimir
