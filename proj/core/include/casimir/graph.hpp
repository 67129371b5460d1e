#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

/// Boundary condition attached to a vertex. Neumann and Dirichlet are piston
/// endpoints and legal only at valence 1; Kirchhoff (continuity + current
/// conservation) is legal at any valence.
enum class BoundaryKind { Neumann, Dirichlet, Kirchhoff };

const char* boundary_kind_name(BoundaryKind kind);

/// One end of a bond as seen from a vertex: bond index plus which end (0/1).
struct BondEnd {
  int bond = -1;
  int end = 0;

  friend bool operator==(const BondEnd&, const BondEnd&) = default;
};

struct Vertex {
  std::string name;
  BoundaryKind kind = BoundaryKind::Kirchhoff;
  std::vector<BondEnd> incident;  // ordered; loops contribute two entries

  int valence() const { return static_cast<int>(incident.size()); }
};

struct Bond {
  std::string name;
  std::array<int, 2> ends{-1, -1};  // vertex indices; may coincide (loop)
  double length = 0.0;
};

/// Vertex declaration used while assembling a graph.
struct VertexDecl {
  std::string name;
  BoundaryKind kind;
};

/// Bond declaration; endpoints are vertex names to allow forward references.
struct BondDecl {
  std::string name;
  std::string vertex_a;
  std::string vertex_b;
  double length;
};

/// A finite metric graph. Immutable after assembly; all operations on it are
/// pure, so instances can be shared freely across threads.
///
/// Directed bonds are indexed 2*bond + dir with dir 0 the forward direction
/// (ends[0] -> ends[1]) and dir 1 the reverse. Reversal is d ^ 1.
class Graph {
 public:
  /// Builds a graph from declarations. Throws SemanticError for duplicate
  /// names or bond endpoints that name no declared vertex. Value-level
  /// invariants (positive lengths, piston valence) are *not* enforced here;
  /// see validate_graph.
  static Graph assemble(std::vector<VertexDecl> vertices,
                        std::vector<BondDecl> bonds);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  int bond_count() const { return static_cast<int>(bonds_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  double total_length() const { return total_length_; }

  /// Index lookups by name; -1 when absent.
  int vertex_index(std::string_view name) const;
  int bond_index(std::string_view name) const;

  // --- directed-bond view -------------------------------------------------
  int directed_count() const { return 2 * bond_count(); }
  static int reverse_directed(int d) { return d ^ 1; }
  static int bond_of(int d) { return d / 2; }

  int tail(int d) const { return bonds_[d / 2].ends[d & 1]; }
  int head(int d) const { return bonds_[d / 2].ends[1 - (d & 1)]; }
  double directed_length(int d) const { return bonds_[d / 2].length; }

  /// End index (0/1) of bond(d) at the head of d.
  static int head_end(int d) { return 1 - (d & 1); }
  /// Directed bond entering a vertex through bond end (bond, end).
  static int entering(BondEnd e) { return 2 * e.bond + (e.end == 1 ? 0 : 1); }
  /// Directed bond leaving a vertex through bond end (bond, end).
  static int leaving(BondEnd e) { return 2 * e.bond + (e.end == 0 ? 0 : 1); }

  /// Copy of this graph with bond j set to a new length (used by the
  /// finite-difference force pipeline).
  Graph with_bond_length(int bond, double length) const;

 private:
  Graph() = default;
  void recompute_total_length();

  std::vector<Vertex> vertices_;
  std::vector<Bond> bonds_;
  double total_length_ = 0.0;
};

/// One invariant violation found by validate_graph.
struct Violation {
  std::string subject;  // vertex or bond name
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every value-level graph invariant (positive finite lengths,
/// piston kinds at valence 1, incidence consistency, total-length sum).
/// Never throws; problems are the report.
ValidationReport validate_graph(const Graph& g);

/// Star builder: one Kirchhoff center, B piston leaves. `piston_kinds` must
/// be Neumann or Dirichlet. Throws SizeMismatch when list lengths disagree
/// with B.
Graph build_star(int num_bonds, const std::vector<double>& lengths,
                 const std::vector<BoundaryKind>& piston_kinds);

/// Single bond of length `a` with the given endpoint conditions.
Graph build_interval(double a, BoundaryKind left, BoundaryKind right);

/// Star-shape recognition: a designated center whose bonds each lead to a
/// distinct valence-1 Neumann/Dirichlet leaf.
struct StarView {
  int center = -1;
  std::vector<int> leaf_of_bond;          // vertex index per bond
  std::vector<BoundaryKind> piston_kind;  // per bond
  std::vector<double> leg_length;         // per bond
};

/// Returns the star decomposition or throws NotAStar. A valence-1 Neumann
/// center is accepted (it is the B = 1 Kirchhoff case).
StarView star_view(const Graph& g);

bool is_star(const Graph& g);

}  // namespace casimir
