// graph-casimir: vacuum energies and piston forces on metric graphs.
//
// Subcommands: validate, spectrum, energy, force, orbits, converge,
// empiston, figure. Tabular output is CSV on stdout (or --out <path>);
// repeated runs with identical flags produce byte-identical output.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "casimir/closed_form.hpp"
#include "casimir/convergence.hpp"
#include "casimir/em_piston.hpp"
#include "casimir/energy.hpp"
#include "casimir/format.hpp"
#include "casimir/graph_io.hpp"
#include "casimir/orbits.hpp"
#include "casimir/spectrum.hpp"

namespace {

using namespace casimir;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ReferenceTooCoarse:
      return 3;
    default:
      return 2;
  }
}

struct GraphSource {
  std::string path;
  int star_bonds = 0;
  std::vector<double> lengths;
  std::vector<std::string> pistons;

  void add_options(CLI::App* cmd) {
    auto* file = cmd->add_option("--graph", path, "graph file to load");
    auto* star = cmd->add_option("--star", star_bonds,
                                 "build a Kirchhoff star with B bonds");
    cmd->add_option("--length", lengths,
                    "bond length(s); one value is broadcast to all bonds");
    cmd->add_option("--piston", pistons,
                    "piston kind(s): neumann or dirichlet; one value is "
                    "broadcast");
    file->excludes(star);
    star->excludes(file);
  }

  Graph build() const {
    if (!path.empty()) return load_graph_file(path);
    if (star_bonds < 1)
      fail(ErrorCode::SemanticError,
           "no graph source: pass --graph <file> or --star <B>");
    std::vector<double> lens = lengths;
    if (lens.empty()) lens.assign(star_bonds, 1.0);
    if (lens.size() == 1) lens.assign(star_bonds, lens[0]);
    if (static_cast<int>(lens.size()) != star_bonds)
      fail(ErrorCode::SizeMismatch, "--length needs 1 or B values");
    std::vector<std::string> kinds = pistons;
    if (kinds.empty()) kinds.assign(star_bonds, "neumann");
    if (kinds.size() == 1) kinds.assign(star_bonds, kinds[0]);
    if (static_cast<int>(kinds.size()) != star_bonds)
      fail(ErrorCode::SizeMismatch, "--piston needs 1 or B values");
    std::vector<BoundaryKind> pk;
    for (const std::string& k : kinds) {
      if (k == "neumann") pk.push_back(BoundaryKind::Neumann);
      else if (k == "dirichlet") pk.push_back(BoundaryKind::Dirichlet);
      else fail(ErrorCode::SemanticError, "unknown piston kind '" + k + "'");
    }
    return build_star(star_bonds, lens, pk);
  }
};

std::uint64_t node_budget_from_env() {
  const char* env = std::getenv("GRAPH_CASIMIR_BUDGET");
  if (!env) return OrbitSumConfig{}.node_budget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    fail(ErrorCode::SemanticError,
         "GRAPH_CASIMIR_BUDGET must be a positive integer");
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(ErrorCode::SemanticError, "cannot write '" + out_path + "'");
  f << text;
}

std::vector<double> parse_lmax_grid(const std::string& s) {
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(step > 0) || hi < lo)
    fail(ErrorCode::SemanticError, "--lmax-grid expects lo:hi:step");
  std::vector<double> grid;
  for (double v = lo; v <= hi + 1e-9 * step; v += step) grid.push_back(v);
  return grid;
}

/// Tight spectral configuration used as the reference for convergence
/// studies: order-5 Richardson on {0.4,...,0.025} x (smallest bond length).
SpectralConfig reference_spectral_config(const Graph& g) {
  double lmin = g.bonds().front().length;
  for (const Bond& b : g.bonds()) lmin = std::min(lmin, b.length);
  SpectralConfig cfg;
  cfg.t_grid = {0.4 * lmin, 0.2 * lmin, 0.1 * lmin, 0.05 * lmin, 0.025 * lmin};
  cfg.order = 5;
  cfg.tol = 1e-10;
  return cfg;
}

const std::vector<double> kFig3Lengths = {1.1, 1.6176, 1.2985, 1.1159};

std::string energy_csv(const EnergyResult& r) {
  return "E_c,error,method\n" + fmt_g9(r.value) + ',' +
         fmt_g9(r.error_estimate) + ',' + method_name(r.method) + '\n';
}

EnergyResult analytic_energy(const Graph& g) {
  if (g.bond_count() == 1 && g.vertex_count() == 2) {
    const Bond& b = g.bonds()[0];
    BoundaryKind l = g.vertices()[b.ends[0]].kind;
    BoundaryKind r = g.vertices()[b.ends[1]].kind;
    if (l != BoundaryKind::Kirchhoff && r != BoundaryKind::Kirchhoff) {
      EnergyResult res;
      res.value = interval_energy(IntervalSpec{b.length, l, r});
      res.method = Method::analytic;
      return res;
    }
  }
  StarView sv = star_view(g);  // NotAStar if not analytic-friendly
  double a = sv.leg_length.front();
  bool equal = true, all_n = true, all_d = true;
  for (size_t j = 0; j < sv.leg_length.size(); ++j) {
    equal = equal && std::abs(sv.leg_length[j] - a) <= 1e-12 * a;
    all_n = all_n && sv.piston_kind[j] == BoundaryKind::Neumann;
    all_d = all_d && sv.piston_kind[j] == BoundaryKind::Dirichlet;
  }
  if (!equal || (!all_n && !all_d))
    fail(ErrorCode::SemanticError,
         "no analytic closed form for this graph (need an equal-length star "
         "with uniform piston kind, or an interval)");
  EnergyResult res;
  int B = g.bond_count();
  res.value = all_n ? star_energy_equal(B, a) : dirichlet_star_energy_equal(B, a);
  res.method = Method::analytic;
  return res;
}

int run(int argc, char** argv) {
  CLI::App app{"vacuum (Casimir) energies and piston forces on metric graphs"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // validate ---------------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "check a graph description");
  GraphSource validate_src;
  validate_src.add_options(validate);

  // spectrum ---------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "normal-mode frequencies as CSV");
  GraphSource spectrum_src;
  spectrum_src.add_options(spectrum);
  double omega_max = 0.0, tol = 1e-10;
  spectrum->add_option("--omega-max", omega_max, "frequency cutoff")->required();
  spectrum->add_option("--tol", tol, "root accuracy (default 1e-10)");

  // energy -----------------------------------------------------------------
  auto* energy = app.add_subcommand("energy", "renormalized vacuum energy");
  GraphSource energy_src;
  energy_src.add_options(energy);
  std::string method = "spectral";
  std::vector<double> t_grid;
  int order = 0, n_max = 0;
  double e_tol = 1e-10, lmax = 0.0;
  std::string repetitions = "truncated";
  energy->add_option("--method", method,
                     "analytic | spectral | orbit | transfer (default spectral)")
      ->check(CLI::IsMember({"analytic", "spectral", "orbit", "transfer"}));
  energy->add_option("--t-grid", t_grid, "regularization t values")
      ->delimiter(',');
  energy->add_option("--order", order, "Richardson order (default: grid size)");
  energy->add_option("--tol", e_tol, "spectrum root accuracy");
  energy->add_option("--lmax", lmax, "orbit-length cutoff for --method orbit");
  energy->add_option("--repetitions", repetitions,
                     "orbit repetitions: truncated | unbounded")
      ->check(CLI::IsMember({"truncated", "unbounded"}));
  energy->add_option("--nmax", n_max,
                     "trace-sum depth for --method transfer (0 = exact)");

  // force ------------------------------------------------------------------
  auto* force = app.add_subcommand("force", "piston forces, positive = repulsive");
  GraphSource force_src;
  force_src.add_options(force);
  std::string f_method = "spectral", f_bond;
  std::vector<double> f_t_grid;
  int f_order = 0;
  double f_tol = 1e-10, f_lmax = 0.0, f_step = 0.0;
  std::string f_repetitions = "truncated";
  force->add_option("--method", f_method, "analytic | spectral | orbit")
      ->check(CLI::IsMember({"analytic", "spectral", "orbit"}));
  force->add_option("--bond", f_bond, "restrict to one bond by name");
  force->add_option("--t-grid", f_t_grid, "regularization t values")
      ->delimiter(',');
  force->add_option("--order", f_order, "Richardson order");
  force->add_option("--tol", f_tol, "spectrum root accuracy");
  force->add_option("--lmax", f_lmax, "orbit-length cutoff for --method orbit");
  force->add_option("--repetitions", f_repetitions,
                    "orbit repetitions: truncated | unbounded")
      ->check(CLI::IsMember({"truncated", "unbounded"}));
  force->add_option("--step", f_step,
                    "finite-difference step (default 1e-3 * bond length)");

  // orbits -----------------------------------------------------------------
  auto* orbits = app.add_subcommand("orbits", "primitive periodic orbits as CSV");
  GraphSource orbits_src;
  orbits_src.add_options(orbits);
  double o_lmax = 0.0, o_floor = 0.0;
  orbits->add_option("--lmax", o_lmax, "orbit-length cutoff")->required();
  orbits->add_option("--amplitude-floor", o_floor,
                     "keep orbits with |A_p| above this");

  // converge ---------------------------------------------------------------
  auto* converge =
      app.add_subcommand("converge", "orbit-sum error vs cutoff as CSV");
  GraphSource converge_src;
  converge_src.add_options(converge);
  std::string lmax_grid_spec;
  double delta = 1.0;
  converge->add_option("--lmax-grid", lmax_grid_spec, "lo:hi:step")->required();
  converge->add_option("--delta", delta, "shell bin width (default 1)");

  // empiston ---------------------------------------------------------------
  auto* empiston =
      app.add_subcommand("empiston", "electromagnetic piston calculator");
  double em_a = 0.0, em_b = 0.0;
  empiston->add_option("--a", em_a, "piston depth")->required();
  empiston->add_option("--b", em_b, "shaft cross-section side")->required();

  // figure -----------------------------------------------------------------
  auto* figure = app.add_subcommand("figure", "reproduce figure data sets");
  int fig_no = 0;
  std::string fig_grid_spec = "8:32:1";
  double fig_delta = 1.0;
  figure->add_option("figure_number", fig_no, "2, 3 or 4")->required();
  figure->add_option("--lmax-grid", fig_grid_spec, "lo:hi:step (figures 3, 4)");
  figure->add_option("--delta", fig_delta, "shell bin width (figures 3, 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage problems exit 1
  }
  const std::uint64_t budget = node_budget_from_env();

  if (*validate) {
    Graph g = validate_src.build();
    ValidationReport report = validate_graph(g);
    if (!report.ok()) {
      std::ostringstream os;
      for (const Violation& v : report.violations)
        os << "violation: " << v.subject << ": " << v.message << '\n';
      emit(os.str(), out_path);
      return 2;
    }
    emit("ok: " + std::to_string(g.vertex_count()) + " vertices, " +
             std::to_string(g.bond_count()) + " bonds, total length " +
             fmt_g9(g.total_length()) + "\n",
         out_path);
    return 0;
  }

  if (*spectrum) {
    Graph g = spectrum_src.build();
    emit(spectrum_to_csv(compute_spectrum(g, omega_max, tol)), out_path);
    return 0;
  }

  if (*energy) {
    Graph g = energy_src.build();
    EnergyResult res;
    if (method == "analytic") {
      res = analytic_energy(g);
    } else if (method == "spectral") {
      SpectralConfig cfg;
      cfg.t_grid = t_grid;
      cfg.order = order;
      cfg.tol = e_tol;
      res = vacuum_energy_spectral(g, cfg);
    } else if (method == "orbit") {
      if (!(lmax > 0)) fail(ErrorCode::SemanticError, "--lmax required");
      OrbitSumConfig cfg;
      cfg.l_max = lmax;
      cfg.repetitions = repetitions == "unbounded" ? RepetitionMode::unbounded
                                                   : RepetitionMode::truncated;
      cfg.node_budget = budget;
      res = vacuum_energy_orbits(g, cfg);
    } else {
      res = n_max > 0 ? equal_length_trace_energy(g, n_max)
                      : equal_length_trace_energy_exact(g);
    }
    emit(energy_csv(res), out_path);
    return 0;
  }

  if (*force) {
    Graph g = force_src.build();
    std::vector<int> bonds;
    if (!f_bond.empty()) {
      int j = g.bond_index(f_bond);
      if (j < 0) fail(ErrorCode::UnknownBond, "no bond named '" + f_bond + "'");
      bonds.push_back(j);
    } else {
      // default: every bond carrying a piston
      for (int j = 0; j < g.bond_count(); ++j)
        for (int e : {0, 1})
          if (g.vertices()[g.bonds()[j].ends[e]].kind != BoundaryKind::Kirchhoff) {
            bonds.push_back(j);
            break;
          }
      if (bonds.empty())
        fail(ErrorCode::SemanticError, "graph has no piston bonds");
    }
    ForceResult result;
    for (int j : bonds) {
      double value = 0.0;
      if (f_method == "analytic") {
        if (g.bond_count() == 1 && !is_star(g)) {
          const Bond& b = g.bonds()[0];
          value = interval_force(IntervalSpec{b.length,
                                              g.vertices()[b.ends[0]].kind,
                                              g.vertices()[b.ends[1]].kind});
        } else {
          EnergyResult e = analytic_energy(g);
          // equal star: E ~ 1/a, so the collective force is E/a; per piston /B
          double a = star_view(g).leg_length.front();
          value = e.value / a / g.bond_count();
        }
        result.method = Method::analytic;
      } else if (f_method == "spectral") {
        SpectralConfig cfg;
        cfg.t_grid = f_t_grid;
        cfg.order = f_order;
        cfg.tol = f_tol;
        value = force_spectral(g, j, f_step, cfg);
        result.method = Method::spectral;
      } else {
        if (!(f_lmax > 0)) fail(ErrorCode::SemanticError, "--lmax required");
        OrbitSumConfig cfg;
        cfg.l_max = f_lmax;
        cfg.repetitions = f_repetitions == "unbounded"
                              ? RepetitionMode::unbounded
                              : RepetitionMode::truncated;
        cfg.node_budget = budget;
        value = force_orbits(g, j, cfg);
        result.method = Method::orbit;
      }
      result.force_per_bond[g.bonds()[j].name] = value;
    }
    std::ostringstream os;
    os << "bond,force,method\n";
    for (int j : bonds)
      os << g.bonds()[j].name << ','
         << fmt_g9(result.force_per_bond[g.bonds()[j].name]) << ','
         << method_name(result.method) << '\n';
    emit(os.str(), out_path);
    return 0;
  }

  if (*orbits) {
    Graph g = orbits_src.build();
    OrbitSumConfig cfg;
    cfg.l_max = o_lmax;
    cfg.amplitude_floor = o_floor;
    cfg.node_budget = budget;
    emit(orbits_to_csv(g, enumerate_primitive_orbits(g, cfg)), out_path);
    return 0;
  }

  if (*converge) {
    Graph g = converge_src.build();
    std::vector<double> grid = parse_lmax_grid(lmax_grid_spec);
    EnergyResult ref = vacuum_energy_spectral(g, reference_spectral_config(g));
    ConvergenceStudy study = convergence_study(g, grid, ref, delta, budget);
    emit(convergence_to_csv(study), out_path);
    std::cerr << "slope " << fmt_g9(study.fitted_slope) << " residual "
              << fmt_g9(study.fit_residual) << " reference "
              << fmt_g9(ref.value) << " +- " << fmt_g9(ref.error_estimate)
              << '\n';
    return 0;
  }

  if (*empiston) {
    PistonGeometry geom{em_a, em_b};
    PistonForce net = piston_net_force(geom);
    std::ostringstream os;
    os << "conducting pressure inside: " << fmt_g9(conducting_pressure_inside(em_a))
       << "\npermeable pressure inside: " << fmt_g9(permeable_pressure_inside(em_a))
       << "\nshaft pressure: " << fmt_g9(shaft_pressure(em_b))
       << "\nnet force on piston: " << fmt_g9(net.force)
       << "\nclassification: " << (net.force > 0 ? "repulsive" : "attractive")
       << "\nregime: "
       << (net.in_regime ? "ok" : "outside closed-form regime") << " (a/b = "
       << fmt_g9(em_a / em_b) << ")\n"
       << "note: the pressure formulas hold for a << b; toward the cubical "
          "box (a ~ b) the permeable piston turns attractive\n";
    emit(os.str(), out_path);
    return 0;
  }

  if (*figure) {
    if (fig_no == 2) {
      std::ostringstream os;
      os << "B,piston,exact_collective,exact_per_piston,shortest\n";
      for (int B = 1; B <= 30; ++B) {
        for (BoundaryKind kind : {BoundaryKind::Neumann, BoundaryKind::Dirichlet}) {
          Graph g = build_star(B, std::vector<double>(B, 1.0),
                               std::vector<BoundaryKind>(B, kind));
          double e1 = equal_length_trace_energy_exact(g).value;
          // E(a) = E(1)/a for the equal star, so at a = 1 the collective
          // force -dE/da equals the energy value
          double collective = e1;
          os << B << ','
             << (kind == BoundaryKind::Neumann ? "neumann" : "dirichlet") << ','
             << fmt_g9(collective) << ',' << fmt_g9(collective / B) << ','
             << fmt_g9(shortest_orbit_force(g, 0)) << '\n';
        }
      }
      emit(os.str(), out_path);
      return 0;
    }
    if (fig_no == 3 || fig_no == 4) {
      std::vector<BoundaryKind> kinds(4, BoundaryKind::Neumann);
      if (fig_no == 4) kinds[0] = BoundaryKind::Dirichlet;
      Graph g = build_star(4, kFig3Lengths, kinds);
      std::vector<double> grid = parse_lmax_grid(fig_grid_spec);
      EnergyResult ref = vacuum_energy_spectral(g, reference_spectral_config(g));
      ConvergenceStudy study = convergence_study(g, grid, ref, fig_delta, budget);
      emit(convergence_to_csv(study), out_path);
      std::cerr << "slope " << fmt_g9(study.fitted_slope) << " reference "
                << fmt_g9(ref.value) << " +- " << fmt_g9(ref.error_estimate)
                << '\n';
      return 0;
    }
    fail(ErrorCode::SemanticError, "figure number must be 2, 3 or 4");
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const casimir::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
