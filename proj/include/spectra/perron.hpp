#pragma once

#include "spectra/digraph.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

/// Certified enclosure of a real root with exact rational endpoints.
/// Either degenerate (lo == hi: the root exactly) or open: the target
/// polynomial is strictly negative at lo and strictly positive at hi, and
/// exactly one root lies in (lo, hi).
struct RootBracket {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

enum class RhoSource { trinomial, power_iteration, polynomial };

/// Spectral-radius estimate: a floating approximation inside a certified
/// bracket. For trinomial/polynomial sources the certificate is exact
/// endpoint signs; for power iteration it is the Collatz-Wielandt quotient
/// bounds, which enclose the Perron root for any positive test vector.
struct PerronEstimate {
  double value = 0.0;
  RootBracket bracket;
  RhoSource source = RhoSource::polynomial;
};

Rational default_root_tolerance();  // bracket width 1e-12

/// Bracket the unique root of p above `lo` to width <= tol, for p strictly
/// increasing on [lo, inf) with p(lo) < 0. Bisection with exact signs.
RootBracket bracket_increasing_root(const Polynomial& p, const Rational& lo,
                                    const Rational& tol);

/// The unique root > 1 of f(x) = x^n - x^a - x^b.
///
/// Requires 0 <= a <= b < n and n >= a+b+1, which makes f strictly
/// increasing for x > 1 (n x^(n-1) >= (a+b+1) x^(n-1) > a x^(a-1) + b x^(b-1)),
/// so the bisection bracket certifies uniqueness. Every theta/infty
/// characteristic polynomial satisfies the requirement.
PerronEstimate trinomial_root(int n, int a, int b,
                              const Rational& tol = default_root_tolerance());

/// Power iteration on A + I, which is primitive whenever A is irreducible,
/// so the iteration converges even for periodic digraphs such as cycles.
/// The returned bracket is the exact Collatz-Wielandt enclosure computed
/// from the final iterate in rational arithmetic.
PerronEstimate power_iteration_rho(const Digraph& d, double tol = 1e-12);

/// Spectral radius dispatcher: cycles are exact, recognized theta/infty
/// digraphs use the closed-form trinomial, and everything else isolates
/// the largest real root of charpoly_det inside a Collatz-Wielandt
/// enclosure with exact-sign endpoints.
PerronEstimate rho(const Digraph& d,
                   const Rational& tol = default_root_tolerance());

enum class Ordering { less, equal, greater };

struct CompareOutcome {
  Ordering order;
  RootBracket left, right;  // final brackets, kept as evidence
};

/// Certified comparison of the largest real roots of two monic polynomials,
/// each with a unique root > 1 and strictly increasing past it (all family
/// trinomials and the x^n - 2x - 1 chord polynomial qualify). Refines
/// exact-sign brackets until they separate; equal roots are detected
/// through the polynomial gcd. Throws UnresolvedError if the roots can
/// neither be separated nor proven equal at width 1e-30.
CompareOutcome compare_rho_detailed(const Polynomial& p1, const Polynomial& p2);
Ordering compare_rho(const Polynomial& p1, const Polynomial& p2);

/// Comparison core for roots already isolated in certified brackets (for
/// example brackets produced by rho()); same contract as compare_rho.
CompareOutcome compare_bracketed(const Polynomial& p1, RootBracket b1,
                                 const Polynomial& p2, RootBracket b2);

}  // namespace spectra
