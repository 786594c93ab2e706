#include <doctest.h>

#include "oracles.hpp"
#include "spectra/charpoly.hpp"
#include "spectra/enumeration.hpp"
#include "spectra/errors.hpp"
#include "spectra/families.hpp"

using namespace spectra;

TEST_CASE("determinant engine on knowns") {
  CHECK(charpoly_det(Digraph(1, {})) ==
        Polynomial(std::vector<Int>{0, 1}));  // single vertex: x
  for (int n = 2; n <= 8; ++n)
    CHECK(charpoly_det(build_cycle(n)) == cycle_charpoly(n));
  CHECK(charpoly_det(build_theta(ThetaParams(0, 1, 1))) ==
        Polynomial(std::vector<Int>{-1, -1, 0, 0, 1}));  // x^4 - x - 1
  // complete digraph on 3 vertices: (x-2)(x+1)^2
  const Digraph k3(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(charpoly_det(k3) == Polynomial(std::vector<Int>{-2, -3, 0, 1}));
}

TEST_CASE("cycle-cover engine on knowns") {
  for (int n = 2; n <= 8; ++n)
    CHECK(charpoly_cycles(build_cycle(n)) == cycle_charpoly(n));
  // Two 2-cycles at a hub: cycles of length 2 twice, no disjoint pair.
  CHECK(charpoly_cycles(build_infty(InftyParams(2, 2))) ==
        Polynomial(std::vector<Int>{0, -2, 0, 1}));
  // The chord digraph: empty union, the full cycle, and two (n-1)-cycles.
  for (int n = 4; n <= 9; ++n)
    CHECK(charpoly_cycles(build_theta_plus_arc(n)) == theta_plus_arc_charpoly(n));
  CHECK(charpoly_cycles(Digraph(1, {})) == Polynomial(std::vector<Int>{0, 1}));
  CHECK_THROWS_AS(charpoly_cycles(build_cycle(13)), CapExceededError);
}

TEST_CASE("the two engines agree on every strongly connected digraph, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Digraph& d : enumerate_strongly_connected(n, std::nullopt))
      CHECK(charpoly_det(d) == charpoly_cycles(d));
}

TEST_CASE("engines agree on random digraphs, including non-strong ones") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = order(rng);
    const double p = density(rng);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && std::uniform_real_distribution<double>(0, 1)(rng) < p)
          arcs.push_back({u, v});
    const Digraph d(n, std::move(arcs));
    CHECK(charpoly_det(d) == charpoly_cycles(d));
  }
}

TEST_CASE("structure of characteristic polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph d = oracles::random_strongly_connected(rng, 6);
    const Polynomial p = charpoly_det(d);
    CHECK(p.degree() == d.order());
    CHECK(p.is_monic());
    CHECK(p.coeff(d.order() - 1) == 0);  // zero trace without loops
    // value at arbitrary integers matches an independent determinant
    for (int x : {-2, 1, 3})
      CHECK(p.eval(Int(x)) == oracles::charpoly_value_at(d, Int(x)));
  }
}

TEST_CASE("adjacency matrix view") {
  const Digraph d = build_infty(InftyParams(2, 3));
  const Eigen::MatrixXd a = adjacency_matrix(d);
  CHECK(a.rows() == 4);
  CHECK(a.sum() == doctest::Approx(5.0));
  for (const Arc& arc : d.arcs()) CHECK(a(arc.from, arc.to) == 1.0);
  CHECK(a.diagonal().sum() == 0.0);
}
