#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "casimir/graph.hpp"
#include "casimir/graph_io.hpp"
#include "casimir/scattering.hpp"

using namespace casimir;

namespace {

const std::vector<double> kFig3Lengths = {1.1, 1.6176, 1.2985, 1.1159};

Graph fig3_graph() {
  return build_star(4, kFig3Lengths, std::vector<BoundaryKind>(4, BoundaryKind::Neumann));
}

/// Random connected-ish test graphs with legal kinds; loops and multi-edges
/// are allowed by the data model and should be exercised.
Graph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 5);
  std::uniform_real_distribution<double> len(0.3, 2.5);
  int v = nv(rng);
  std::vector<VertexDecl> vs;
  for (int i = 0; i < v; ++i)
    vs.push_back(VertexDecl{"v" + std::to_string(i), BoundaryKind::Kirchhoff});
  std::vector<BondDecl> bs;
  int bond_id = 0;
  auto add_bond = [&](int a, int b) {
    bs.push_back(BondDecl{"b" + std::to_string(bond_id++),
                          "v" + std::to_string(a), "v" + std::to_string(b),
                          len(rng)});
  };
  // every vertex gets at least one bond end
  for (int i = 1; i < v; ++i)
    add_bond(i, std::uniform_int_distribution<int>(0, i - 1)(rng));
  if (v == 1) add_bond(0, 0);  // forced loop
  int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int e = 0; e < extra; ++e)
    add_bond(std::uniform_int_distribution<int>(0, v - 1)(rng),
             std::uniform_int_distribution<int>(0, v - 1)(rng));
  Graph g = Graph::assemble(vs, bs);
  // downgrade some valence-1 vertices to pistons
  std::vector<VertexDecl> vs2;
  for (const Vertex& vert : g.vertices()) {
    BoundaryKind k = vert.kind;
    if (vert.valence() == 1) {
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: k = BoundaryKind::Neumann; break;
        case 1: k = BoundaryKind::Dirichlet; break;
        default: break;
      }
    }
    vs2.push_back(VertexDecl{vert.name, k});
  }
  return Graph::assemble(vs2, bs);
}

}  // namespace

TEST_CASE("vertex scattering matrices") {
  CHECK(vertex_scattering(BoundaryKind::Neumann, 1)(0, 0) == 1.0);
  CHECK(vertex_scattering(BoundaryKind::Dirichlet, 1)(0, 0) == -1.0);
  CHECK(vertex_scattering(BoundaryKind::Kirchhoff, 1)(0, 0) == doctest::Approx(1.0));

  Eigen::MatrixXd k4 = vertex_scattering(BoundaryKind::Kirchhoff, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(k4(i, j) == doctest::Approx(i == j ? -0.5 : 0.5));

  CHECK_THROWS_AS(vertex_scattering(BoundaryKind::Dirichlet, 2), Error);
  CHECK_THROWS_AS(vertex_scattering(BoundaryKind::Neumann, 3), Error);
  CHECK_THROWS_AS(vertex_scattering(BoundaryKind::Kirchhoff, 0), Error);
}

TEST_CASE("global scattering of a single bond") {
  Graph nn = build_interval(1.0, BoundaryKind::Neumann, BoundaryKind::Neumann);
  Eigen::MatrixXd s = assemble_global_scattering(nn).matrix;
  CHECK(s(0, 0) == 0.0);
  CHECK(s(1, 1) == 0.0);
  CHECK(s(1, 0) == 1.0);  // reflection at the right end
  CHECK(s(0, 1) == 1.0);  // reflection at the left end

  Graph nd = build_interval(1.0, BoundaryKind::Neumann, BoundaryKind::Dirichlet);
  Eigen::MatrixXd s2 = assemble_global_scattering(nd).matrix;
  CHECK(s2(1, 0) == -1.0);
  CHECK(s2(0, 1) == 1.0);
}

TEST_CASE("B=2 Kirchhoff center is transparent") {
  Graph g = build_star(2, {1.0, 1.0},
                       {BoundaryKind::Neumann, BoundaryKind::Neumann});
  Eigen::MatrixXd s = assemble_global_scattering(g).matrix;
  // directed 0 = center->end1, 1 = end1->center, 2 = center->end2, 3 = ...
  CHECK(s(0, 1) == doctest::Approx(0.0));  // no back-reflection at center
  CHECK(s(2, 1) == doctest::Approx(1.0));  // unit transmission
  CHECK(s(0, 3) == doctest::Approx(1.0));
}

TEST_CASE("build_star shapes") {
  Graph one = build_star(1, {2.0}, {BoundaryKind::Neumann});
  CHECK(one.vertex_count() == 2);
  CHECK(one.bond_count() == 1);
  CHECK(one.vertices()[0].kind == BoundaryKind::Kirchhoff);

  Graph f3 = fig3_graph();
  CHECK(f3.vertex_count() == 5);
  CHECK(f3.bond_count() == 4);
  CHECK(f3.total_length() == doctest::Approx(5.132).epsilon(1e-12));

  CHECK_THROWS_AS(build_star(3, {1.0, 1.0}, std::vector<BoundaryKind>(3, BoundaryKind::Neumann)),
                  Error);
  CHECK_THROWS_AS(build_star(2, {1.0, 1.0}, std::vector<BoundaryKind>(2, BoundaryKind::Kirchhoff)),
                  Error);
}

TEST_CASE("star recognition") {
  CHECK(is_star(fig3_graph()));
  // a Neumann end is a valence-1 Kirchhoff center, so ND is the B=1 star...
  CHECK(is_star(build_interval(1.0, BoundaryKind::Neumann, BoundaryKind::Dirichlet)));
  // ...but two Dirichlet ends leave no admissible center
  CHECK(is_star(build_interval(1.0, BoundaryKind::Dirichlet, BoundaryKind::Dirichlet)) ==
        false);
  StarView sv = star_view(build_star(2, {1.0, 2.0},
                                     {BoundaryKind::Neumann, BoundaryKind::Dirichlet}));
  CHECK(sv.center == 0);
  CHECK(sv.piston_kind[1] == BoundaryKind::Dirichlet);
  CHECK(sv.leg_length[1] == 2.0);

  // triangle: three Kirchhoff vertices, no pistons
  Graph tri = Graph::assemble(
      {{"a", BoundaryKind::Kirchhoff}, {"b", BoundaryKind::Kirchhoff}, {"c", BoundaryKind::Kirchhoff}},
      {{"ab", "a", "b", 1.0}, {"bc", "b", "c", 1.2}, {"ca", "c", "a", 1.4}});
  CHECK_THROWS_AS(star_view(tri), Error);
}

TEST_CASE("graph file parsing") {
  Graph g = parse_graph_text(
      "# a one-bond piston\n"
      "vertex l neumann\n"
      "vertex r dirichlet\n"
      "\n"
      "bond b l r 1.0\n");
  CHECK(g.bond_count() == 1);
  CHECK(g.vertices()[1].kind == BoundaryKind::Dirichlet);
  CHECK(g.total_length() == 1.0);

  // bonds may come before vertices
  Graph g2 = parse_graph_text("bond b l r 2.5\nvertex l neumann\nvertex r neumann\n");
  CHECK(g2.bonds()[0].length == 2.5);

  Graph f3 = parse_graph_text(
      "vertex center kirchhoff\n"
      "vertex end1 neumann\nvertex end2 neumann\n"
      "vertex end3 neumann\nvertex end4 neumann\n"
      "bond bond1 center end1 1.1\n"
      "bond bond2 center end2 1.6176\n"
      "bond bond3 center end3 1.2985\n"
      "bond bond4 center end4 1.1159\n");
  CHECK(f3.total_length() == doctest::Approx(5.132).epsilon(1e-12));
}

TEST_CASE("parser error reporting") {
  // missing vertex names the id
  try {
    parse_graph_text("vertex l neumann\nbond b l ghost 1.0\n");
    FAIL("expected SemanticError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SemanticError);
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }
  // syntax errors carry the line number
  try {
    parse_graph_text("vertex l neumann\nbogus line here\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph_text("vertex l weird\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("vertex l neumann\nvertex l neumann\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("vertex l neumann\nvertex r neumann\nbond b l r 0\n"), Error);
  CHECK_THROWS_AS(parse_graph_text("vertex l neumann\nvertex r neumann\nbond b l r 1x\n"), Error);
  // dirichlet at valence 2 is semantically invalid
  CHECK_THROWS_AS(parse_graph_text("vertex a neumann\nvertex m dirichlet\nvertex b neumann\n"
                                   "bond x a m 1.0\nbond y m b 1.0\n"),
                  Error);
}

TEST_CASE("validate_graph reports violations") {
  CHECK(validate_graph(fig3_graph()).ok());

  Graph zero = Graph::assemble({{"l", BoundaryKind::Neumann}, {"r", BoundaryKind::Neumann}},
                               {{"b", "l", "r", 0.0}});
  auto report = validate_graph(zero);
  REQUIRE(!report.ok());
  CHECK(report.violations[0].message == "nonpositive length");

  Graph bad = Graph::assemble({{"a", BoundaryKind::Neumann}, {"m", BoundaryKind::Dirichlet},
                               {"b", BoundaryKind::Neumann}},
                              {{"x", "a", "m", 1.0}, {"y", "m", "b", 1.0}});
  auto report2 = validate_graph(bad);
  REQUIRE(!report2.ok());
  CHECK(report2.violations[0].subject == "m");
  CHECK(report2.violations[0].message == "piston kind at valence > 1");
}

TEST_CASE("serialization round-trips") {
  Graph f3 = build_star(4, kFig3Lengths,
                        {BoundaryKind::Dirichlet, BoundaryKind::Neumann,
                         BoundaryKind::Neumann, BoundaryKind::Neumann});
  Graph back = parse_graph_text(serialize_graph(f3));
  REQUIRE(back.vertex_count() == f3.vertex_count());
  REQUIRE(back.bond_count() == f3.bond_count());
  for (int i = 0; i < f3.vertex_count(); ++i) {
    CHECK(back.vertices()[i].name == f3.vertices()[i].name);
    CHECK(back.vertices()[i].kind == f3.vertices()[i].kind);
  }
  for (int j = 0; j < f3.bond_count(); ++j) {
    CHECK(back.bonds()[j].name == f3.bonds()[j].name);
    CHECK(back.bonds()[j].ends == f3.bonds()[j].ends);
    CHECK(back.bonds()[j].length == f3.bonds()[j].length);  // bit-exact
  }
}

TEST_CASE("directed bond reversal is an involution") {
  Graph g = fig3_graph();
  for (int d = 0; d < g.directed_count(); ++d) {
    CHECK(Graph::reverse_directed(Graph::reverse_directed(d)) == d);
    CHECK(g.head(d) == g.tail(Graph::reverse_directed(d)));
  }
}

TEST_CASE("scattering invariants on random graphs") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng);
    REQUIRE(validate_graph(g).ok());
    for (const Vertex& v : g.vertices()) {
      Eigen::MatrixXd sigma = vertex_scattering(v.kind, v.valence());
      Eigen::MatrixXd sq = sigma * sigma;
      CHECK((sq - Eigen::MatrixXd::Identity(sq.rows(), sq.cols())).cwiseAbs().maxCoeff() <
            1e-12);
      CHECK((sigma - sigma.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
    Eigen::MatrixXd s = assemble_global_scattering(g).matrix;
    Eigen::MatrixXd st = s * s.transpose();
    CHECK((st - Eigen::MatrixXd::Identity(st.rows(), st.cols())).cwiseAbs().maxCoeff() <
          1e-12);
    // off-block entries vanish: S(d', d) != 0 only when head(d) = tail(d')
    for (int d = 0; d < g.directed_count(); ++d)
      for (int dp = 0; dp < g.directed_count(); ++dp)
        if (s(dp, d) != 0.0) CHECK(g.head(d) == g.tail(dp));

    // round-trip through the file format
    Graph back = parse_graph_text(serialize_graph(g));
    REQUIRE(back.bond_count() == g.bond_count());
    for (int j = 0; j < g.bond_count(); ++j)
      CHECK(back.bonds()[j].length == g.bonds()[j].length);
  }
}
