#pragma once

#include <iosfwd>
#include <string>

#include "casimir/graph.hpp"

namespace casimir {

/// Parses the line-oriented graph file format:
///
///   # comment to end of line; blank lines ignored
///   vertex <name> <kirchhoff|neumann|dirichlet>
///   bond <name> <vertexA> <vertexB> <length>
///
/// Names are nonempty [A-Za-z0-9_]+ tokens, unique within their kind;
/// vertices may appear before or after the bonds that use them. Throws
/// SyntaxError (with line number) for malformed lines and SemanticError for
/// duplicate names, dangling vertex references, nonpositive lengths, or
/// piston kinds at valence > 1. The returned graph passes validate_graph.
Graph parse_graph_file(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Writes a graph back out in the same format; parse(serialize(g)) is
/// structurally identical to g.
std::string serialize_graph(const Graph& g);

}  // namespace casimir
