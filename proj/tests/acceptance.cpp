// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spectra/charpoly.hpp"
#include "spectra/enumeration.hpp"
#include "spectra/families.hpp"
#include "spectra/perron.hpp"
#include "spectra/subdigraph.hpp"
#include "spectra/verification.hpp"

using namespace spectra;

namespace {

struct Failure {
  std::string message;
};

void require(bool cond, const std::string& message) {
  if (!cond) throw Failure{message};
}

Polynomial trinomial(int n, int a, int b) {
  std::vector<Int> c(n + 1);
  c[n] = 1;
  c[a] -= 1;
  c[b] -= 1;
  return Polynomial(std::move(c));
}

Digraph build_family(const FamilyParams& p) {
  if (const auto* t = std::get_if<ThetaParams>(&p)) return build_theta(*t);
  return build_infty(std::get<InftyParams>(p));
}

void require_report(const VerificationReport& r) {
  if (r.pass) return;
  std::string detail;
  for (const std::string& e : r.evidence)
    if (e.rfind("FAIL", 0) == 0) {
      detail = e;
      break;
    }
  throw Failure{r.claim + " " + r.params + ": " + detail};
}

// --- criteria ---------------------------------------------------------

void criterion_1() {
  const PerronEstimate e = trinomial_root(8, 0, 6);
  require(trinomial(8, 0, 6).sign_at(Rational(47, 40)) > 0,
          "x^8 - x^6 - 1 is not positive at 47/40");
  require(e.bracket.hi < Rational(47, 40), "bracket not certified below 1.175");
  // Stated tolerance: |rho - 1.1748| <= 5e-5. The root is
  // 1.17485214..., which sits 5.215e-5 away, so this check cannot pass;
  // it is kept as stated rather than loosened.
  std::ostringstream detail;
  detail << "rho(theta(0,6,0)) = " << decimal_string(e.bracket.midpoint(), 10)
         << ", |rho - 1.1748| = " << std::abs(e.value - 1.1748)
         << " exceeds 5e-5";
  require(std::abs(e.value - 1.1748) <= 5e-5, detail.str());
}

void criterion_2() {
  const std::vector<FamilyParams> chain = {
      FamilyParams(InftyParams(2, 3)), FamilyParams(ThetaParams(0, 2, 0)),
      FamilyParams(ThetaParams(1, 1, 0)), FamilyParams(ThetaParams(0, 1, 1))};
  auto poly = [](const FamilyParams& p) {
    return std::holds_alternative<ThetaParams>(p)
               ? theta_charpoly(std::get<ThetaParams>(p))
               : infty_charpoly(std::get<InftyParams>(p));
  };
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    require(compare_rho(poly(chain[i]), poly(chain[i + 1])) == Ordering::greater,
            "order-4 chain broke at position " + std::to_string(i));

  const double plastic =
      oracles::bisect_root([](double x) { return x * x * x - x - 1; }, 1, 2);
  const double golden_sqrt = std::sqrt((1 + std::sqrt(5.0)) / 2);
  const double cbrt2 = std::cbrt(2.0);
  const double quartic =
      oracles::bisect_root([](double x) { return x * x * x * x - x - 1; }, 1, 2);
  const std::vector<double> expected = {plastic, golden_sqrt, cbrt2, quartic};
  for (size_t i = 0; i < chain.size(); ++i) {
    const double got = rho(build_family(chain[i])).value;
    require(std::abs(got - expected[i]) <= 1e-4,
            "closed-form mismatch for " + family_label(chain[i]));
  }
}

void criterion_3() {
  for (int n = 5; n <= 7; ++n)
    require(compare_rho(infty_charpoly(InftyParams(3, n - 2)),
                        theta_charpoly(ThetaParams(0, n - 2, 0))) ==
                Ordering::greater,
            "expected infty(3,n-2) above theta(0,n-2,0) at n=" + std::to_string(n));
  for (int n = 8; n <= 50; ++n)
    require(compare_rho(infty_charpoly(InftyParams(3, n - 2)),
                        theta_charpoly(ThetaParams(0, n - 2, 0))) == Ordering::less,
            "expected theta(0,n-2,0) above infty(3,n-2) at n=" + std::to_string(n));
}

void criterion_4() {
  for (int n = 1; n <= 5; ++n)
    for (const Digraph& d :
         enumerate_strongly_connected(n, std::nullopt, default_thread_count()))
      require(charpoly_det(d) == charpoly_cycles(d),
              "engine mismatch at order " + std::to_string(n));
  std::mt19937_64 rng(0x5eed2026);
  std::uniform_int_distribution<int> order(2, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const Digraph d = oracles::random_strongly_connected(rng, order(rng));
    require(charpoly_det(d) == charpoly_cycles(d),
            "engine mismatch on random digraph, trial " + std::to_string(trial));
  }
}

void criterion_5() {
  for (int n = 3; n <= 10; ++n)
    for (const FamilyParams& p : enumerate_bicyclic_params(n)) {
      const Polynomial closed = std::holds_alternative<ThetaParams>(p)
                                    ? theta_charpoly(std::get<ThetaParams>(p))
                                    : infty_charpoly(std::get<InftyParams>(p));
      require(charpoly_det(build_family(p)) == closed,
              "closed form mismatch for " + family_label(p));
    }
  for (int n = 4; n <= 10; ++n)
    require(charpoly_det(build_theta_plus_arc(n)) == theta_plus_arc_charpoly(n),
            "chord digraph charpoly mismatch at n=" + std::to_string(n));
}

double criterion_6_part(int n) {
  const auto start = std::chrono::steady_clock::now();
  require_report(verify_global_minima(n));
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void criterion_7() {
  for (int n = 4; n <= 30; ++n) {
    require_report(verify_theta_shift(n));
    require_report(verify_infty_extremes(n));
    require_report(verify_cross_family(n));
    require_report(verify_bicyclic_minima(n));
  }
  require_report(verify_monotone_sequences(30));
  require_report(verify_second_max(30));
}

void criterion_8() {
  for (int n = 3; n <= 20; ++n)
    for (const FamilyParams& p : enumerate_bicyclic_params(n)) {
      const Digraph d = build_family(p);
      require(std::abs(rho(d).value - power_iteration_rho(d, 1e-10).value) <= 1e-8,
              "method disagreement on " + family_label(p));
    }
  for (int n = 4; n <= 20; ++n) {
    const Digraph d = build_theta_plus_arc(n);
    require(std::abs(rho(d).value - power_iteration_rho(d, 1e-10).value) <= 1e-8,
            "method disagreement on the chord digraph, n=" + std::to_string(n));
  }
}

void criterion_9() {
  const Polynomial h(std::vector<Int>{1, 1, 1, -1, -1});
  const Rational value = poly_eval_rational(h, Rational(47, 40));
  require(value == Rational(69799, 2560000), "exact h(47/40) value changed");
  const Rational reported(27265, 1000000);
  const Rational diff = value - reported;
  require(diff < Rational(1, 100000) && -diff < Rational(1, 100000),
          "h(47/40) differs from 0.027265 by more than 1e-5");
  for (int n = 8; n <= 50; ++n) {
    const RootBracket b = trinomial_root(n, 0, n - 2).bracket;
    require(h.sign_at(b.lo) > 0 && h.sign_at(b.hi) > 0,
            "h not positive on the certified bracket at n=" + std::to_string(n));
  }
}

void criterion_10() {
  for (int n = 5; n <= 7; ++n) require_report(verify_one_arc_extension(n));
}

// --- driver ------------------------------------------------------------

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "rho(theta(0,6,0)) = 1.1748 +- 5e-5, certified < 1.175", 1.0,
       criterion_1},
      {2, "order-4 certified chain with closed-form cross-check", 1.0,
       criterion_2},
      {3, "second-maximum crossover: n in 5..7 vs 8..50", 5.0, criterion_3},
      {4, "charpoly engines agree: full n <= 5 and 1000 random n <= 8", 120.0,
       criterion_4},
      {5, "closed-form conformance for all families n <= 10", 10.0, criterion_5},
      {6, "exhaustive four smallest classes at n = 4 and n = 5", 605.0,
       [] {
         const double t4 = criterion_6_part(4);
         require(t4 < 5.0, "n=4 scan exceeded 5 s");
         const double t5 = criterion_6_part(5);
         require(t5 < 600.0, "n=5 scan exceeded 10 min");
       }},
      {7, "family inequality suites certified for n <= 30", 30.0, criterion_7},
      {8, "power iteration vs certified roots within 1e-8, n <= 20", 10.0,
       criterion_8},
      {9, "exact h(47/40) and positivity on certified brackets to n = 50", 1.0,
       criterion_9},
      {10, "one-arc extension scan finds exactly the two admissible arcs", 60.0,
       criterion_10},
  };

  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && elapsed > c.budget_seconds) {
      std::ostringstream over;
      over << "runtime " << elapsed << " s exceeded budget " << c.budget_seconds
           << " s";
      failure = over.str();
    }
    if (failure.empty()) {
      ++passed;
      std::printf("[PASS] criterion %2d (%6.2fs) %s\n", c.number, elapsed,
                  c.title.c_str());
    } else {
      std::printf("[FAIL] criterion %2d (%6.2fs) %s: %s\n", c.number, elapsed,
                  c.title.c_str(), failure.c_str());
    }
  }
  std::printf("RESULT: %d/%d criteria passed\n", passed,
              static_cast<int>(criteria.size()));
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
