#include <doctest.h>

#include <algorithm>

#include "spectra/errors.hpp"
#include "spectra/verification.hpp"

using namespace spectra;

namespace {

bool mentions(const VerificationReport& r, const std::string& needle) {
  return std::any_of(r.evidence.begin(), r.evidence.end(),
                     [&](const std::string& e) {
                       return e.find(needle) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("theta shifts") {
  const VerificationReport r4 = verify_theta_shift(4);
  CHECK(r4.pass);
  CHECK(mentions(r4, "rho(theta(1,1,0)) > rho(theta(0,1,1))"));
  CHECK(mentions(r4, "rho(theta(0,2,0)) > rho(theta(0,1,1))"));
  CHECK(mentions(r4, "shift instances certified: 2"));

  const VerificationReport r6 = verify_theta_shift(6);
  CHECK(r6.pass);
  CHECK(mentions(r6, "rho(theta(1,2,1)) > rho(theta(1,1,2))"));
  CHECK_THROWS_AS(verify_theta_shift(3), PreconditionError);
}

TEST_CASE("infty extremes") {
  const VerificationReport vacuous = verify_infty_extremes(4);
  CHECK(vacuous.pass);
  CHECK(mentions(vacuous, "vacuous"));

  const VerificationReport r5 = verify_infty_extremes(5);
  CHECK(r5.pass);
  CHECK(mentions(r5, "rho(infty(2,4)) > rho(infty(3,3))"));

  const VerificationReport r9 = verify_infty_extremes(9);
  CHECK(r9.pass);
  CHECK(mentions(r9, "rho(infty(2,8)) > rho(infty(3,7))"));
  CHECK(mentions(r9, "rho(infty(3,7)) > rho(infty(4,6))"));
  CHECK(mentions(r9, "rho(infty(4,6)) > rho(infty(5,5))"));
}

TEST_CASE("cross family") {
  for (int n : {4, 5, 6}) {
    const VerificationReport r = verify_cross_family(n);
    CHECK(r.pass);
  }
  CHECK(mentions(verify_cross_family(6), "rho(infty(3,4)) > rho(theta(0,2,2))"));
}

TEST_CASE("monotone sequences") {
  const VerificationReport r = verify_monotone_sequences(12);
  CHECK(r.pass);
  CHECK(mentions(r, "rho(theta(0,2,0)) > rho(theta(0,2,1))"));
  CHECK(mentions(r, "rho(theta(0,6,0)) > rho(theta(0,7,0))"));
  CHECK(mentions(r, "rho(theta(0,6,0)) < 1.175"));
}

TEST_CASE("bicyclic minima") {
  for (int n : {4, 5, 6}) {
    const VerificationReport r = verify_bicyclic_minima(n);
    CHECK(r.pass);
    CHECK(mentions(r, "brute-force"));
  }
  const VerificationReport r4 = verify_bicyclic_minima(4);
  CHECK(mentions(r4, "rho(theta(0,1,1)) < rho(theta(1,1,0))"));
  CHECK(mentions(r4, "rho(theta(1,1,0)) < rho(theta(0,2,0))"));
  CHECK(mentions(r4, "rho(infty(2,3)) > rho(theta(0,2,0))"));
}

TEST_CASE("global minima at order 4") {
  const VerificationReport r = verify_global_minima(4);
  CHECK(r.pass);
  CHECK(mentions(r, "classes scanned: 83"));
  CHECK(mentions(r, "rho(cycle) < rho(theta(0,1,1))"));
  CHECK_THROWS_AS(verify_global_minima(6), PreconditionError);
}

TEST_CASE("second maximum with crossover") {
  const VerificationReport r = verify_second_max(9);
  CHECK(r.pass);
  CHECK(mentions(r, "rho(infty(3,3)) > rho(theta(0,3,0))"));   // n=5 branch
  CHECK(mentions(r, "rho(infty(3,6)) < rho(theta(0,6,0))"));   // n=8 branch
  CHECK(mentions(r, "second maximum is infty(3,5)"));          // n=7
  CHECK(mentions(r, "second maximum is theta(0,7,0)"));        // n=9
  CHECK(mentions(r, "sign(1+x+x^2-x^3-x^4) = +1"));
}

TEST_CASE("subdigraph monotonicity, exhaustive at small order") {
  for (int n : {2, 3, 4}) {
    const VerificationReport r = verify_subdigraph_monotonicity(n);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(verify_subdigraph_monotonicity(6), PreconditionError);
}

TEST_CASE("one-arc extension scan") {
  const VerificationReport r5 = verify_one_arc_extension(5);
  CHECK(r5.pass);
  CHECK(mentions(r5, "admissible arcs are exactly 2->3 and 4->2"));
  CHECK_THROWS_AS(verify_one_arc_extension(4), PreconditionError);
  CHECK_THROWS_AS(verify_one_arc_extension(8), PreconditionError);
}

TEST_CASE("claim runner") {
  CHECK_THROWS_AS(run_claims("no-such-claim", 4, 6), PreconditionError);

  const std::vector<VerificationReport> reports = run_claims("all", 4, 6);
  CHECK(!reports.empty());
  for (const VerificationReport& r : reports) CHECK(r.pass);
  // ordered by claim id, then instance
  std::vector<std::string> ids;
  for (const VerificationReport& r : reports) ids.push_back(r.claim);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  // one-arc-extension appears for n in {5, 6} only
  CHECK(std::count(ids.begin(), ids.end(), "one-arc-extension") == 2);
  // whole-range claims appear once
  CHECK(std::count(ids.begin(), ids.end(), "second-max") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "monotone-sequences") == 1);

  const std::string line = report_line(reports.front());
  CHECK(line.find("claim=") == 0);
  CHECK(line.find("verdict=pass") != std::string::npos);
  CHECK(line.find("evidence=") != std::string::npos);

  const std::vector<VerificationReport> single = run_claims("cross-family", 5, 7);
  CHECK(single.size() == 3);
}
