#include "casimir/scattering.hpp"

namespace casimir {

Eigen::MatrixXd vertex_scattering(BoundaryKind kind, int valence) {
  if (valence < 1)
    fail(ErrorCode::IllegalValence, "valence must be positive");
  switch (kind) {
    case BoundaryKind::Neumann:
      if (valence != 1)
        fail(ErrorCode::IllegalValence, "neumann requires valence 1");
      return Eigen::MatrixXd::Constant(1, 1, 1.0);
    case BoundaryKind::Dirichlet:
      if (valence != 1)
        fail(ErrorCode::IllegalValence, "dirichlet requires valence 1");
      return Eigen::MatrixXd::Constant(1, 1, -1.0);
    case BoundaryKind::Kirchhoff: {
      Eigen::MatrixXd sigma =
          Eigen::MatrixXd::Constant(valence, valence, 2.0 / valence);
      sigma.diagonal().array() -= 1.0;
      return sigma;
    }
  }
  fail(ErrorCode::IllegalValence, "unknown boundary kind");
}

GlobalScattering assemble_global_scattering(const Graph& g) {
  const int n = g.directed_count();
  GlobalScattering gs;
  gs.matrix = Eigen::MatrixXd::Zero(n, n);
  for (const Vertex& v : g.vertices()) {
    Eigen::MatrixXd sigma = vertex_scattering(v.kind, v.valence());
    for (int q_in = 0; q_in < v.valence(); ++q_in) {
      int d_in = Graph::entering(v.incident[q_in]);
      for (int q_out = 0; q_out < v.valence(); ++q_out) {
        int d_out = Graph::leaving(v.incident[q_out]);
        gs.matrix(d_out, d_in) = sigma(q_out, q_in);
      }
    }
  }
  return gs;
}

Eigen::MatrixXcd unitary_at(const GlobalScattering& s, const Graph& g,
                            double omega) {
  const int n = g.directed_count();
  Eigen::MatrixXcd u(n, n);
  for (int d = 0; d < n; ++d) {
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, omega * g.directed_length(d)));
    u.col(d) = s.matrix.col(d).cast<std::complex<double>>() * phase;
  }
  return u;
}

Eigen::MatrixXcd unitary_at(const Graph& g, double omega) {
  return unitary_at(assemble_global_scattering(g), g, omega);
}

}  // namespace casimir
