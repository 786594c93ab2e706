#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "spectra/enumeration.hpp"
#include "spectra/errors.hpp"
#include "spectra/families.hpp"
#include "spectra/perron.hpp"

using namespace spectra;

TEST_CASE("tiny exact counts") {
  CHECK(enumerate_strongly_connected(1, std::nullopt).size() == 1);
  CHECK(enumerate_strongly_connected(2, std::nullopt).size() == 1);  // C2 only
  const std::vector<Digraph> n3m3 = enumerate_strongly_connected(3, 3);
  REQUIRE(n3m3.size() == 1);
  CHECK(canonical_form(n3m3[0]) == canonical_form(build_cycle(3)));
  CHECK(enumerate_strongly_connected(3, 6).size() == 1);  // complete digraph
  CHECK(enumerate_strongly_connected(3, 4).size() == 2);
}

TEST_CASE("regression class counts at small order") {
  // Frozen from an independent brute-force scan (all permutations for the
  // canonical dedup): 5 classes at order 3, 83 at order 4.
  CHECK(enumerate_strongly_connected(3, std::nullopt).size() == 5);
  const std::vector<Digraph> n4 = enumerate_strongly_connected(4, std::nullopt);
  CHECK(n4.size() == 83);
  std::map<int, int> by_arcs;
  for (const Digraph& d : n4) by_arcs[d.arc_count()] += 1;
  CHECK(by_arcs == std::map<int, int>{{4, 1},
                                      {5, 4},
                                      {6, 16},
                                      {7, 22},
                                      {8, 22},
                                      {9, 11},
                                      {10, 5},
                                      {11, 1},
                                      {12, 1}});
}

TEST_CASE("order-5 classes satisfy the orbit-counting identity") {
  // 5048 classes, frozen from this enumerator; the Burnside-style identity
  // sum(|S_5| / |Aut|) = 565080 matches an independent labeled scan (and
  // the published count of labeled strongly connected digraphs).
  const std::vector<Digraph> classes = enumerate_strongly_connected(5, std::nullopt, 2);
  CHECK(classes.size() == 5048);
  long long labeled = 0;
  for (const Digraph& d : classes) {
    std::vector<int> perm{0, 1, 2, 3, 4};
    int aut = 0;
    do {
      if (d.relabeled(perm).arcs() == d.arcs()) ++aut;
    } while (std::next_permutation(perm.begin(), perm.end()));
    labeled += 120 / aut;
  }
  CHECK(labeled == 565080);
}

TEST_CASE("the n+1-arc classes are exactly the parametric families") {
  for (int n = 3; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    for (const Digraph& d : enumerate_strongly_connected(n, n + 1))
      brute.insert(canonical_form(d).bits);
    std::set<std::uint64_t> family;
    for (const FamilyParams& p : enumerate_bicyclic_params(n)) {
      const Digraph d = std::holds_alternative<ThetaParams>(p)
                            ? build_theta(std::get<ThetaParams>(p))
                            : build_infty(std::get<InftyParams>(p));
      family.insert(canonical_form(d).bits);
    }
    CHECK(brute == family);
  }
}

TEST_CASE("emitted digraphs are strongly connected and pairwise distinct") {
  for (int n = 2; n <= 4; ++n) {
    const std::vector<Digraph> all = enumerate_strongly_connected(n, std::nullopt);
    for (const Digraph& d : all) CHECK(is_strongly_connected(d));
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        CHECK(!oracles::isomorphic_brute(all[i], all[j]));
  }
}

TEST_CASE("scan is deterministic across thread counts") {
  const std::vector<Digraph> one = enumerate_strongly_connected(4, std::nullopt, 1);
  const std::vector<Digraph> four = enumerate_strongly_connected(4, std::nullopt, 4);
  CHECK(one == four);
  const std::vector<Digraph> m5a = enumerate_strongly_connected(5, 6, 1);
  const std::vector<Digraph> m5b = enumerate_strongly_connected(5, 6, 3);
  CHECK(m5a == m5b);
  CHECK(m5a.size() == 7);  // the seven bicyclic classes of order 5
  // frozen from an independent all-permutations scan
  CHECK(enumerate_strongly_connected(5, 7, 2).size() == 58);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(enumerate_strongly_connected(6, std::nullopt), CapExceededError);
  CHECK_THROWS_AS(enumerate_strongly_connected(6, 9), CapExceededError);
  CHECK_THROWS_AS(enumerate_strongly_connected(8, 9), CapExceededError);
  CHECK(enumerate_strongly_connected(6, 5).empty());  // fewer arcs than order
}

TEST_CASE("rank_by_rho orders the order-4 bicyclic digraphs as published") {
  std::vector<Digraph> members;
  for (const FamilyParams& p : enumerate_bicyclic_params(4))
    members.push_back(std::holds_alternative<ThetaParams>(p)
                          ? build_theta(std::get<ThetaParams>(p))
                          : build_infty(std::get<InftyParams>(p)));
  const std::vector<RankedEntry> ranked = rank_by_rho(members, 4);
  REQUIRE(ranked.size() == 4);
  const std::vector<std::string> expected = {"theta(0,1,1)", "theta(1,1,0)",
                                             "theta(0,2,0)", "infty(2,3)"};
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(family_label(*recognize_family(ranked[i].digraph)) == expected[i]);
    CHECK(!ranked[i].tied_with_prev);
  }

  // closed-form oracles: x^3 = x+1 root, sqrt golden ratio, cbrt 2, x^4 = x+1
  const double plastic =
      oracles::bisect_root([](double x) { return x * x * x - x - 1; }, 1, 2);
  const double golden_sqrt = std::sqrt((1 + std::sqrt(5.0)) / 2);
  const double cbrt2 = std::cbrt(2.0);
  const double quartic =
      oracles::bisect_root([](double x) { return x * x * x * x - x - 1; }, 1, 2);
  CHECK(ranked[0].estimate.value == doctest::Approx(quartic).epsilon(1e-4));
  CHECK(ranked[1].estimate.value == doctest::Approx(cbrt2).epsilon(1e-4));
  CHECK(ranked[2].estimate.value == doctest::Approx(golden_sqrt).epsilon(1e-4));
  CHECK(ranked[3].estimate.value == doctest::Approx(plastic).epsilon(1e-4));
}

TEST_CASE("rank_by_rho over all order-4 strongly connected digraphs") {
  const std::vector<Digraph> all = enumerate_strongly_connected(4, std::nullopt);
  const std::vector<RankedEntry> ranked = rank_by_rho(all, 4);
  CHECK(canonical_form(ranked[0].digraph) == canonical_form(build_cycle(4)));
  CHECK(canonical_form(ranked[1].digraph) ==
        canonical_form(build_theta(ThetaParams(0, 1, 1))));
  CHECK(canonical_form(ranked[2].digraph) ==
        canonical_form(build_theta(ThetaParams(1, 1, 0))));
  CHECK(canonical_form(ranked[3].digraph) ==
        canonical_form(build_theta(ThetaParams(0, 2, 0))));
}

TEST_CASE("rank_by_rho ignores input order and handles single inputs") {
  std::vector<Digraph> members;
  for (const FamilyParams& p : enumerate_bicyclic_params(5))
    members.push_back(std::holds_alternative<ThetaParams>(p)
                          ? build_theta(std::get<ThetaParams>(p))
                          : build_infty(std::get<InftyParams>(p)));
  std::vector<Digraph> reversed(members.rbegin(), members.rend());
  const auto a = rank_by_rho(members, static_cast<int>(members.size()));
  const auto b = rank_by_rho(reversed, static_cast<int>(members.size()));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].digraph == b[i].digraph);

  const auto single = rank_by_rho({build_cycle(3)}, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].digraph == build_cycle(3));
}
