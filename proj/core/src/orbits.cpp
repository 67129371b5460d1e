#include "casimir/orbits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "casimir/closed_form.hpp"
#include "casimir/format.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_lex_min_rotation(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  for (int p = 1; p < n; ++p) {
    if (s[p] != s[0]) continue;
    for (int k = 1; k < n; ++k) {
      int a = s[(p + k) % n];
      int b = s[k];
      if (a < b) return false;
      if (a > b) break;
    }
  }
  return true;
}

bool is_primitive_cycle(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  for (int p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i) periodic = (s[i] == s[i - p]);
    if (periodic) return false;
  }
  return true;
}

std::vector<int> lex_min_rotation(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int best = 0;
  for (int p = 1; p < n; ++p) {
    for (int k = 0; k < n; ++k) {
      int a = s[(p + k) % n];
      int b = s[(best + k) % n];
      if (a != b) {
        if (a < b) best = p;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = s[(best + k) % n];
  return out;
}

/// DFS over directed-bond cycles. The sink sees each primitive class once,
/// as (sequence starting at its smallest element, length, amplitude);
/// sequences arrive in lexicographic order.
template <class Sink>
void enumerate_general(const Graph& g, const OrbitSumConfig& cfg, Sink&& sink) {
  const int n = g.directed_count();
  const Eigen::MatrixXd s_matrix = assemble_global_scattering(g).matrix;

  // adjacency with zero-amplitude transitions dropped
  std::vector<std::vector<std::pair<int, double>>> next(n);
  for (int d = 0; d < n; ++d)
    for (int dp = 0; dp < n; ++dp)
      if (s_matrix(dp, d) != 0.0) next[d].emplace_back(dp, s_matrix(dp, d));

  std::vector<int> seq;
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self, double length, double amp) -> void {
    if (++nodes > cfg.node_budget)
      fail(ErrorCode::BudgetExceeded,
           "orbit enumeration exceeded node budget of " +
               std::to_string(cfg.node_budget));
    const int first = seq.front();
    const int last = seq.back();
    double close = s_matrix(first, last);
    if (close != 0.0) {
      double a_p = amp * close;
      if (std::abs(a_p) > cfg.amplitude_floor && is_lex_min_rotation(seq) &&
          is_primitive_cycle(seq))
        sink(seq, length, a_p);
    }
    for (const auto& [d, s] : next[last]) {
      if (d < first) continue;  // only explore from the minimal element
      double nl = length + g.directed_length(d);
      if (nl > cfg.l_max) continue;
      double na = amp * s;
      if (cfg.amplitude_floor > 0.0 && std::abs(na) <= cfg.amplitude_floor)
        continue;
      seq.push_back(d);
      self(self, nl, na);
      seq.pop_back();
    }
  };

  for (int d0 = 0; d0 < n; ++d0) {
    if (g.directed_length(d0) > cfg.l_max) continue;
    seq.assign(1, d0);
    dfs(dfs, g.directed_length(d0), 1.0);
  }
}

/// Star fast path: every orbit is a sequence of out-and-back legs, so the
/// DFS runs over legs (half the depth). The sink sees leg sequences; classes
/// and primitivity over legs coincide with the directed-bond notions.
template <class Sink>
void enumerate_star_legs(const Graph& g, const StarView& sv,
                         const OrbitSumConfig& cfg, Sink&& sink) {
  const int B = g.bond_count();
  const double diag = 2.0 / B - 1.0;
  const double offdiag = 2.0 / B;
  std::vector<double> rho(B), leg_len(B);
  for (int j = 0; j < B; ++j) {
    rho[j] = sv.piston_kind[j] == BoundaryKind::Dirichlet ? -1.0 : 1.0;
    leg_len[j] = 2.0 * sv.leg_length[j];
  }

  std::vector<int> seq;
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self, double length, double amp) -> void {
    if (++nodes > cfg.node_budget)
      fail(ErrorCode::BudgetExceeded,
           "orbit enumeration exceeded node budget of " +
               std::to_string(cfg.node_budget));
    const int first = seq.front();
    const int last = seq.back();
    double close = (last == first) ? diag : offdiag;
    if (close != 0.0) {
      double a_p = amp * close;
      if (std::abs(a_p) > cfg.amplitude_floor && is_lex_min_rotation(seq) &&
          is_primitive_cycle(seq))
        sink(seq, length, a_p);
    }
    for (int j = first; j < B; ++j) {
      double t = (j == last) ? diag : offdiag;
      if (t == 0.0) continue;
      double nl = length + leg_len[j];
      if (nl > cfg.l_max) continue;
      double na = amp * t * rho[j];
      if (cfg.amplitude_floor > 0.0 && std::abs(na) <= cfg.amplitude_floor)
        continue;
      seq.push_back(j);
      self(self, nl, na);
      seq.pop_back();
    }
  };

  for (int j0 = 0; j0 < B; ++j0) {
    if (leg_len[j0] > cfg.l_max) continue;
    seq.assign(1, j0);
    dfs(dfs, leg_len[j0], rho[j0]);
  }
}

struct CompactOrbit {
  double length;
  double amplitude;
};

/// Records (length, amplitude) per primitive class, in DFS emission order.
std::vector<CompactOrbit> collect_compact(const Graph& g,
                                          const OrbitSumConfig& cfg) {
  std::vector<CompactOrbit> out;
  auto sink = [&](const std::vector<int>&, double length, double amp) {
    out.push_back(CompactOrbit{length, amp});
  };
  if (is_star(g))
    enumerate_star_legs(g, star_view(g), cfg, sink);
  else
    enumerate_general(g, cfg, sink);
  return out;
}

struct WeightedOrbit {
  double length;
  double amplitude;
  int weight;  // traversal count of the bond under study
};

std::vector<WeightedOrbit> collect_weighted(const Graph& g, int bond,
                                            const OrbitSumConfig& cfg) {
  std::vector<WeightedOrbit> out;
  if (is_star(g)) {
    auto sink = [&](const std::vector<int>& legs, double length, double amp) {
      int m = 0;
      for (int l : legs)
        if (l == bond) m += 2;  // a leg traverses its bond twice
      out.push_back(WeightedOrbit{length, amp, m});
    };
    enumerate_star_legs(g, star_view(g), cfg, sink);
  } else {
    auto sink = [&](const std::vector<int>& seq, double length, double amp) {
      int m = 0;
      for (int d : seq)
        if (Graph::bond_of(d) == bond) ++m;
      out.push_back(WeightedOrbit{length, amp, m});
    };
    enumerate_general(g, cfg, sink);
  }
  return out;
}

/// Width of the trailing length shell used for truncation error estimates:
/// one round trip of the mean bond length.
double shell_width(const Graph& g) {
  return 2.0 * g.total_length() / g.bond_count();
}

}  // namespace

std::vector<PrimitiveOrbit> enumerate_primitive_orbits(
    const Graph& g, const OrbitSumConfig& cfg) {
  std::vector<PrimitiveOrbit> out;

  auto finish = [&](std::vector<int> seq, double length, double amp) {
    PrimitiveOrbit orbit;
    orbit.sequence = lex_min_rotation(seq);
    orbit.length = length;
    orbit.amplitude = amp;
    orbit.traversals.assign(g.bond_count(), 0);
    for (int d : orbit.sequence) orbit.traversals[Graph::bond_of(d)]++;
    out.push_back(std::move(orbit));
  };

  if (is_star(g)) {
    StarView sv = star_view(g);
    // directed bonds of a leg: out = center -> leaf, then its reverse
    std::vector<int> out_bond(g.bond_count());
    for (int j = 0; j < g.bond_count(); ++j) {
      const Bond& b = g.bonds()[j];
      out_bond[j] = 2 * j + (b.ends[0] == sv.center ? 0 : 1);
    }
    auto sink = [&](const std::vector<int>& legs, double length, double amp) {
      std::vector<int> seq;
      seq.reserve(2 * legs.size());
      for (int l : legs) {
        seq.push_back(out_bond[l]);
        seq.push_back(Graph::reverse_directed(out_bond[l]));
      }
      finish(std::move(seq), length, amp);
    };
    enumerate_star_legs(g, sv, cfg, sink);
  } else {
    auto sink = [&](const std::vector<int>& seq, double length, double amp) {
      finish(seq, length, amp);
    };
    enumerate_general(g, cfg, sink);
  }
  return out;
}

double orbit_amplitude(const Graph& g, const std::vector<int>& sequence) {
  if (sequence.empty())
    fail(ErrorCode::DisconnectedStep, "empty orbit sequence");
  for (int d : sequence)
    if (d < 0 || d >= g.directed_count())
      fail(ErrorCode::UnknownBond,
           "directed bond index " + std::to_string(d) + " out of range");
  const Eigen::MatrixXd s_matrix = assemble_global_scattering(g).matrix;
  const int n = static_cast<int>(sequence.size());
  double amp = 1.0;
  for (int i = 0; i < n; ++i) {
    int d = sequence[i];
    int dp = sequence[(i + 1) % n];
    if (g.head(d) != g.tail(dp))
      fail(ErrorCode::DisconnectedStep,
           "steps " + std::to_string(i) + " -> " + std::to_string((i + 1) % n) +
               " do not share a vertex");
    amp *= s_matrix(dp, d);
  }
  return amp;
}

std::vector<std::pair<double, double>> primitive_orbit_records(
    const Graph& g, const OrbitSumConfig& cfg) {
  if (!(cfg.l_max > 0.0)) fail(ErrorCode::DomainError, "l_max must be > 0");
  std::vector<CompactOrbit> orbits = collect_compact(g, cfg);
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const CompactOrbit& a, const CompactOrbit& b) {
                     return a.length < b.length;
                   });
  std::vector<std::pair<double, double>> out;
  out.reserve(orbits.size());
  for (const CompactOrbit& o : orbits) out.emplace_back(o.length, o.amplitude);
  return out;
}

EnergyResult vacuum_energy_orbits(const Graph& g, const OrbitSumConfig& cfg) {
  std::vector<std::pair<double, double>> orbits = primitive_orbit_records(g, cfg);

  const double shell_lo = cfg.l_max - shell_width(g);
  double acc = 0.0, shell = 0.0;
  for (const auto& [length, amplitude] : orbits) {
    if (cfg.repetitions == RepetitionMode::unbounded) {
      double c = dilog(amplitude) / length;
      acc += c;
      if (length > shell_lo) shell += c;
    } else {
      double power = 1.0;
      for (int r = 1; r * length <= cfg.l_max; ++r) {
        power *= amplitude;
        double c = power / (static_cast<double>(r) * r * length);
        acc += c;
        if (r * length > shell_lo) shell += c;
      }
    }
  }

  EnergyResult result;
  result.value = -acc / kTwoPi;
  // the shells beyond the cutoff scale as (l_max + n delta)^-2 with matching
  // signs, so the omitted tail integrates to the last shell times l_max/delta
  result.error_estimate =
      std::abs(shell) / kTwoPi * (cfg.l_max / shell_width(g));
  result.method = Method::orbit;
  result.parameters["l_max"] = cfg.l_max;
  result.parameters["amplitude_floor"] = cfg.amplitude_floor;
  result.parameters["unbounded_repetitions"] =
      cfg.repetitions == RepetitionMode::unbounded ? 1.0 : 0.0;
  result.parameters["primitive_count"] = static_cast<double>(orbits.size());
  return result;
}

double force_orbits(const Graph& g, int bond, const OrbitSumConfig& cfg) {
  if (bond < 0 || bond >= g.bond_count())
    fail(ErrorCode::UnknownBond, "bond index out of range");
  std::vector<WeightedOrbit> orbits = collect_weighted(g, bond, cfg);
  std::stable_sort(orbits.begin(), orbits.end(),
                   [](const WeightedOrbit& a, const WeightedOrbit& b) {
                     return a.length < b.length;
                   });

  double acc = 0.0;
  for (const WeightedOrbit& o : orbits) {
    if (o.weight == 0) continue;
    double l2 = o.length * o.length;
    if (cfg.repetitions == RepetitionMode::unbounded) {
      acc += o.weight * dilog(o.amplitude) / l2;
    } else {
      double power = 1.0;
      for (int r = 1; r * o.length <= cfg.l_max; ++r) {
        power *= o.amplitude;
        acc += power * o.weight / (static_cast<double>(r) * r * l2);
      }
    }
  }
  return -acc / kTwoPi;
}

double shortest_orbit_energy(const Graph& g) {
  StarView sv = star_view(g);
  const int B = g.bond_count();
  const double x = 2.0 / B - 1.0;
  double sum = 0.0;
  for (int j = 0; j < B; ++j) {
    double arg = sv.piston_kind[j] == BoundaryKind::Dirichlet ? -x : x;
    sum += dilog(arg) / sv.leg_length[j];
  }
  return -sum / (4.0 * std::numbers::pi);
}

double shortest_orbit_force(const Graph& g, int bond) {
  StarView sv = star_view(g);
  if (bond < 0 || bond >= g.bond_count())
    fail(ErrorCode::UnknownBond, "bond index out of range");
  const int B = g.bond_count();
  const double x = 2.0 / B - 1.0;
  double arg = sv.piston_kind[bond] == BoundaryKind::Dirichlet ? -x : x;
  double a = sv.leg_length[bond];
  return -dilog(arg) / (4.0 * std::numbers::pi * a * a);
}

namespace {

double common_length(const Graph& g) {
  double l0 = g.bonds().front().length;
  for (const Bond& b : g.bonds())
    if (std::abs(b.length - l0) > 1e-12 * l0)
      fail(ErrorCode::UnequalLengths,
           "bond '" + b.name + "' length differs from " + std::to_string(l0));
  return l0;
}

}  // namespace

EnergyResult equal_length_trace_energy(const Graph& g, int n_max) {
  if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be >= 1");
  double l0 = common_length(g);
  const Eigen::MatrixXd m = assemble_global_scattering(g).matrix;
  Eigen::MatrixXd power = m;
  double acc = 0.0;
  double last_term = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    last_term = power.trace() / (static_cast<double>(n) * n);
    acc += last_term;
    if (n < n_max) power = power * m;
  }
  EnergyResult result;
  result.value = -acc / (kTwoPi * l0);
  // tail bound: |Tr M^N| <= 2B, so the dropped part is below 2B / n_max
  result.error_estimate = std::abs(last_term) / (kTwoPi * l0) +
                          g.directed_count() / (kTwoPi * l0 * n_max);
  result.method = Method::transfer;
  result.parameters["n_max"] = n_max;
  return result;
}

EnergyResult equal_length_trace_energy_exact(const Graph& g) {
  double l0 = common_length(g);
  const Eigen::MatrixXd m = assemble_global_scattering(g).matrix;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    acc += dilog_unit_circle_real(std::arg(solver.eigenvalues()(i)));
  EnergyResult result;
  result.value = -acc / (kTwoPi * l0);
  result.error_estimate = 0.0;
  result.method = Method::transfer;
  return result;
}

std::string orbits_to_csv(const Graph& g,
                          const std::vector<PrimitiveOrbit>& orbits) {
  std::ostringstream os;
  os << "sequence,L_p,A_p";
  for (const Bond& b : g.bonds()) os << ",m_" << b.name;
  os << '\n';
  for (const PrimitiveOrbit& o : orbits) {
    bool first = true;
    for (int d : o.sequence) {
      if (!first) os << ' ';
      first = false;
      os << g.bonds()[Graph::bond_of(d)].name << ((d & 1) ? '-' : '+');
    }
    os << ',' << fmt_g9(o.length) << ',' << fmt_g9(o.amplitude);
    for (int m : o.traversals) os << ',' << m;
    os << '\n';
  }
  return os.str();
}

}  // namespace casimir
