#pragma once

#include <Eigen/Dense>
#include <complex>

#include "casimir/graph.hpp"

namespace casimir {

/// Vertex scattering matrix sigma for a boundary kind at the given valence,
/// indexed by the vertex's incident bond-end order. Neumann -> (+1),
/// Dirichlet -> (-1), Kirchhoff -> 2/v - delta. sigma is symmetric,
/// orthogonal, and squares to the identity.
Eigen::MatrixXd vertex_scattering(BoundaryKind kind, int valence);

/// Global directed-bond scattering matrix: S(d', d) is the amplitude to
/// scatter from directed bond d into d', nonzero only when head(d) equals
/// tail(d'), and then equal to the matching sigma entry at that vertex.
struct GlobalScattering {
  Eigen::MatrixXd matrix;  // 2B x 2B, real orthogonal
};

GlobalScattering assemble_global_scattering(const Graph& g);

/// Quantization matrix U(omega) = S * diag(exp(i omega L_bond(d))); the graph
/// spectrum sits where U has eigenvalue 1.
Eigen::MatrixXcd unitary_at(const Graph& g, double omega);
Eigen::MatrixXcd unitary_at(const GlobalScattering& s, const Graph& g,
                            double omega);

}  // namespace casimir
