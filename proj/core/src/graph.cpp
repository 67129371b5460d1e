#include "casimir/graph.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace casimir {

const char* boundary_kind_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Neumann: return "neumann";
    case BoundaryKind::Dirichlet: return "dirichlet";
    case BoundaryKind::Kirchhoff: return "kirchhoff";
  }
  return "?";
}

Graph Graph::assemble(std::vector<VertexDecl> vertices,
                      std::vector<BondDecl> bonds) {
  Graph g;
  std::unordered_map<std::string, int> vindex;
  for (const auto& vd : vertices) {
    if (vindex.count(vd.name))
      fail(ErrorCode::SemanticError, "duplicate vertex name '" + vd.name + "'");
    vindex.emplace(vd.name, static_cast<int>(g.vertices_.size()));
    g.vertices_.push_back(Vertex{vd.name, vd.kind, {}});
  }
  std::unordered_set<std::string> bnames;
  for (const auto& bd : bonds) {
    if (!bnames.insert(bd.name).second)
      fail(ErrorCode::SemanticError, "duplicate bond name '" + bd.name + "'");
    auto ia = vindex.find(bd.vertex_a);
    if (ia == vindex.end())
      fail(ErrorCode::SemanticError,
           "bond '" + bd.name + "' references missing vertex '" + bd.vertex_a + "'");
    auto ib = vindex.find(bd.vertex_b);
    if (ib == vindex.end())
      fail(ErrorCode::SemanticError,
           "bond '" + bd.name + "' references missing vertex '" + bd.vertex_b + "'");
    int j = static_cast<int>(g.bonds_.size());
    g.bonds_.push_back(Bond{bd.name, {ia->second, ib->second}, bd.length});
    g.vertices_[ia->second].incident.push_back(BondEnd{j, 0});
    g.vertices_[ib->second].incident.push_back(BondEnd{j, 1});
  }
  g.recompute_total_length();
  return g;
}

void Graph::recompute_total_length() {
  total_length_ = 0.0;
  for (const auto& b : bonds_) total_length_ += b.length;
}

int Graph::vertex_index(std::string_view name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i].name == name) return i;
  return -1;
}

int Graph::bond_index(std::string_view name) const {
  for (int j = 0; j < bond_count(); ++j)
    if (bonds_[j].name == name) return j;
  return -1;
}

Graph Graph::with_bond_length(int bond, double length) const {
  Graph g = *this;
  g.bonds_.at(bond).length = length;
  g.recompute_total_length();
  return g;
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport report;
  auto add = [&](const std::string& subject, const std::string& msg) {
    report.violations.push_back(Violation{subject, msg});
  };

  for (const auto& b : g.bonds()) {
    if (!(b.length > 0.0) || !std::isfinite(b.length))
      add(b.name, "nonpositive length");
  }
  for (const auto& v : g.vertices()) {
    if (v.valence() < 1) add(v.name, "isolated vertex (valence 0)");
    if (v.kind != BoundaryKind::Kirchhoff && v.valence() > 1)
      add(v.name, "piston kind at valence > 1");
  }
  // incidence consistency: each bond end referenced exactly once
  std::vector<std::array<int, 2>> seen(g.bond_count(), {0, 0});
  for (int vi = 0; vi < g.vertex_count(); ++vi) {
    for (const BondEnd& e : g.vertices()[vi].incident) {
      if (e.bond < 0 || e.bond >= g.bond_count() || (e.end != 0 && e.end != 1)) {
        add(g.vertices()[vi].name, "incident entry resolves to no bond end");
        continue;
      }
      if (g.bonds()[e.bond].ends[e.end] != vi)
        add(g.vertices()[vi].name,
            "incident entry disagrees with bond '" + g.bonds()[e.bond].name + "'");
      seen[e.bond][e.end]++;
    }
  }
  for (int j = 0; j < g.bond_count(); ++j)
    if (seen[j][0] != 1 || seen[j][1] != 1)
      add(g.bonds()[j].name, "bond end not referenced by exactly one vertex");

  double sum = 0.0;
  for (const auto& b : g.bonds()) sum += b.length;
  if (std::abs(sum - g.total_length()) > 1e-12 * std::max(1.0, std::abs(sum)))
    add("graph", "total length disagrees with bond sum");

  return report;
}

Graph build_star(int num_bonds, const std::vector<double>& lengths,
                 const std::vector<BoundaryKind>& piston_kinds) {
  if (static_cast<int>(lengths.size()) != num_bonds ||
      static_cast<int>(piston_kinds.size()) != num_bonds)
    fail(ErrorCode::SizeMismatch,
         "expected " + std::to_string(num_bonds) + " lengths and piston kinds");
  for (BoundaryKind k : piston_kinds)
    if (k == BoundaryKind::Kirchhoff)
      fail(ErrorCode::IllegalValence, "piston kind must be neumann or dirichlet");

  std::vector<VertexDecl> vs;
  vs.push_back(VertexDecl{"center", BoundaryKind::Kirchhoff});
  std::vector<BondDecl> bs;
  for (int j = 0; j < num_bonds; ++j) {
    std::string leaf = "end" + std::to_string(j + 1);
    vs.push_back(VertexDecl{leaf, piston_kinds[j]});
    bs.push_back(BondDecl{"bond" + std::to_string(j + 1), "center", leaf,
                          lengths[j]});
  }
  return Graph::assemble(std::move(vs), std::move(bs));
}

Graph build_interval(double a, BoundaryKind left, BoundaryKind right) {
  return Graph::assemble({VertexDecl{"left", left}, VertexDecl{"right", right}},
                         {BondDecl{"bond1", "left", "right", a}});
}

StarView star_view(const Graph& g) {
  const int B = g.bond_count();
  if (B < 1) fail(ErrorCode::NotAStar, "graph has no bonds");

  auto try_center = [&](int c) -> bool {
    const Vertex& center = g.vertices()[c];
    if (center.valence() != B) return false;
    if (center.kind != BoundaryKind::Kirchhoff &&
        !(center.valence() == 1 && center.kind == BoundaryKind::Neumann))
      return false;
    for (const auto& b : g.bonds()) {
      if (b.ends[0] == b.ends[1]) return false;  // loop
      int leaf = (b.ends[0] == c) ? b.ends[1] : (b.ends[1] == c ? b.ends[0] : -1);
      if (leaf < 0) return false;
      const Vertex& lv = g.vertices()[leaf];
      if (lv.valence() != 1 || lv.kind == BoundaryKind::Kirchhoff) return false;
    }
    return true;
  };

  int center = -1;
  for (int c = 0; c < g.vertex_count() && center < 0; ++c)
    if (try_center(c)) center = c;
  if (center < 0)
    fail(ErrorCode::NotAStar, "graph is not a piston star with Kirchhoff center");

  StarView sv;
  sv.center = center;
  for (const auto& b : g.bonds()) {
    int leaf = (b.ends[0] == center) ? b.ends[1] : b.ends[0];
    sv.leaf_of_bond.push_back(leaf);
    sv.piston_kind.push_back(g.vertices()[leaf].kind);
    sv.leg_length.push_back(b.length);
  }
  return sv;
}

bool is_star(const Graph& g) {
  try {
    star_view(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace casimir
