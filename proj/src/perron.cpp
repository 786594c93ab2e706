#include "spectra/perron.hpp"

#include <Eigen/Dense>

#include <algorithm>

#include "spectra/charpoly.hpp"
#include "spectra/errors.hpp"
#include "spectra/families.hpp"

namespace spectra {

namespace {

Rational power_of_ten_inverse(int digits) {
  Int den(1);
  for (int i = 0; i < digits; ++i) den *= 10;
  return Rational(1, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

// One exact-sign bisection step. The bracket is assumed to isolate exactly
// one root, so landing on sign 0 collapses it to the root itself.
void refine_step(const Polynomial& p, RootBracket& b) {
  if (b.exact()) return;
  const Rational mid = b.midpoint();
  const int s = p.sign_at(mid);
  if (s == 0) {
    b.lo = mid;
    b.hi = mid;
  } else if (s < 0) {
    b.lo = mid;
  } else {
    b.hi = mid;
  }
}

void refine_to_width(const Polynomial& p, RootBracket& b, const Rational& tol) {
  while (!b.exact() && b.width() > tol) refine_step(p, b);
}

PerronEstimate estimate_from(const Polynomial& p, RootBracket b,
                             const Rational& tol, RhoSource source) {
  refine_to_width(p, b, tol);
  return PerronEstimate{to_double(b.midpoint()), std::move(b), source};
}

// Coefficients of p(x + t); all nonnegative implies p has no root > t
// (every root, real or complex, has real part at most the Perron root).
bool shifted_coeffs_nonnegative(const Polynomial& p, const Rational& t) {
  std::vector<Rational> a(p.coeffs().begin(), p.coeffs().end());
  const int n = p.degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[j] += t * a[j + 1];
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& c) { return c >= 0; });
}

}  // namespace

Rational default_root_tolerance() { return power_of_ten_inverse(12); }

RootBracket bracket_increasing_root(const Polynomial& p, const Rational& lo,
                                    const Rational& tol) {
  const int s_lo = p.sign_at(lo);
  if (s_lo == 0) return RootBracket{lo, lo};
  if (s_lo > 0)
    throw PreconditionError("bracket_increasing_root: p(lo) must be <= 0");
  Rational hi = lo + 1;
  while (true) {
    const int s = p.sign_at(hi);
    if (s == 0) return RootBracket{hi, hi};
    if (s > 0) break;
    hi = lo + (hi - lo) * 2;
  }
  RootBracket b{lo, hi};
  refine_to_width(p, b, tol);
  return b;
}

PerronEstimate trinomial_root(int n, int a, int b, const Rational& tol) {
  if (!(0 <= a && a <= b && b < n && n >= a + b + 1))
    throw PreconditionError(
        "trinomial_root requires 0 <= a <= b < n and n >= a+b+1");
  std::vector<Int> c(n + 1);
  c[n] = 1;
  c[a] -= 1;
  c[b] -= 1;
  const Polynomial p{std::move(c)};
  RootBracket br = bracket_increasing_root(p, Rational(1), tol);
  return estimate_from(p, std::move(br), tol, RhoSource::trinomial);
}

namespace {

// Exact Collatz-Wielandt bounds of rho(A) from a positive test vector.
// The vector is rounded to 64 fractional bits first; the bounds stay
// rigorous for any positive vector, and the rounding keeps the rationals
// flowing into later exact-sign work small.
RootBracket collatz_wielandt(const Digraph& d, const Eigen::VectorXd& x) {
  const int n = d.order();
  const Int scale = Int(1) << 64;
  std::vector<Int> xi(n);
  for (int i = 0; i < n; ++i) {
    xi[i] = Int(Rational(x[i]) * scale);
    if (xi[i] <= 0) xi[i] = 1;
  }
  Rational qlo, qhi;
  for (int i = 0; i < n; ++i) {
    Int yi = xi[i];  // diagonal of A + I
    for_each_bit(d.out_mask(i), [&](int j) { yi += xi[j]; });
    const Rational q(yi, xi[i]);
    if (i == 0 || q < qlo) qlo = q;
    if (i == 0 || q > qhi) qhi = q;
  }
  return RootBracket{qlo - 1, qhi - 1};
}

}  // namespace

PerronEstimate power_iteration_rho(const Digraph& d, double tol) {
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  if (!is_strongly_connected(d))
    throw PreconditionError("power_iteration_rho requires strong connectivity");
  const int n = d.order();
  const Eigen::MatrixXd shifted =
      adjacency_matrix(d) + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  const Rational tol_exact{tol};
  constexpr int kMaxIterations = 1 << 19;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const Eigen::VectorXd y = shifted * x;
    const Eigen::ArrayXd quotients = y.array() / x.array();
    const double gap = quotients.maxCoeff() - quotients.minCoeff();
    x = y / y.maxCoeff();
    if (gap < 0.75 * tol || (iter & 1023) == 1023) {
      RootBracket b = collatz_wielandt(d, x);
      if (b.width() <= tol_exact) {
        const double value = to_double(b.midpoint());
        return PerronEstimate{value, std::move(b), RhoSource::power_iteration};
      }
    }
  }
  throw UnresolvedError("power iteration did not reach requested tolerance");
}

PerronEstimate rho(const Digraph& d, const Rational& tol) {
  if (!is_strongly_connected(d))
    throw PreconditionError("rho requires a strongly connected digraph");
  const int n = d.order();
  if (d.arc_count() == n) {
    // Strongly connected with n arcs forces the directed cycle; rho = 1.
    return PerronEstimate{1.0, RootBracket{Rational(1), Rational(1)},
                          RhoSource::trinomial};
  }
  if (const auto fam = recognize_family(d)) {
    if (const auto* t = std::get_if<ThetaParams>(&*fam))
      return trinomial_root(n, t->a, t->b, tol);
    const auto& i = std::get<InftyParams>(*fam);
    return trinomial_root(n, i.k - 1, i.l - 1, tol);
  }

  const Polynomial p = charpoly_det(d);
  // The enclosure is only a seed: exact bisection below carries the bracket
  // down to any requested tol. Both seed widths stay above the
  // double-iteration quotient-spread floor (~1e-15).
  double pi_tol = 1e-12;
  for (int attempt = 0; attempt < 2; ++attempt, pi_tol /= 100) {
    RootBracket b = power_iteration_rho(d, pi_tol).bracket;
    if (b.exact()) {
      if (p.sign_at(b.lo) == 0)
        return PerronEstimate{to_double(b.lo), std::move(b),
                              RhoSource::polynomial};
      throw UnresolvedError("exact Collatz-Wielandt value is not a root");
    }
    const int s_hi = p.sign_at(b.hi);
    if (s_hi == 0) {
      // hi bounds rho from above and is a root, so it is rho itself.
      return PerronEstimate{to_double(b.hi), RootBracket{b.hi, b.hi},
                            RhoSource::polynomial};
    }
    const int s_lo = p.sign_at(b.lo);
    if (s_lo == 0) {
      if (shifted_coeffs_nonnegative(p, b.lo))
        return PerronEstimate{to_double(b.lo), RootBracket{b.lo, b.lo},
                              RhoSource::polynomial};
      continue;  // a smaller root grazed the enclosure; tighten
    }
    if (s_lo < 0 && s_hi > 0) {
      RootBracket out = std::move(b);
      refine_to_width(p, out, tol);
      return PerronEstimate{to_double(out.midpoint()), std::move(out),
                            RhoSource::polynomial};
    }
    // s_lo > 0: the enclosure still straddles a sign bump below rho.
  }
  throw UnresolvedError("could not certify Perron bracket signs");
}

namespace {

constexpr int kMaxCompareSteps = 512;

Rational separation_floor() {
  return power_of_ten_inverse(30);  // refinement cap
}

CompareOutcome outcome(Ordering o, RootBracket a, RootBracket b) {
  return CompareOutcome{o, std::move(a), std::move(b)};
}

// Root of `exact` (a point) against the single root of p inside open
// bracket b. Returns nullopt while undecided.
std::optional<Ordering> point_vs_bracket(const Rational& x,
                                         const Polynomial& p, RootBracket& b) {
  if (b.exact()) {
    if (x == b.lo) return Ordering::equal;
    return x < b.lo ? Ordering::less : Ordering::greater;
  }
  if (x <= b.lo) return Ordering::less;
  if (x >= b.hi) return Ordering::greater;
  if (p.sign_at(x) == 0) return Ordering::equal;  // x is the isolated root
  refine_step(p, b);
  return std::nullopt;
}

}  // namespace

CompareOutcome compare_bracketed(const Polynomial& p1, RootBracket b1,
                                 const Polynomial& p2, RootBracket b2) {
  if (p1 == p2) return outcome(Ordering::equal, b1, b2);
  for (int step = 0; step < kMaxCompareSteps; ++step) {
    if (b1.exact() && b2.exact()) {
      if (b1.lo == b2.lo) return outcome(Ordering::equal, b1, b2);
      return outcome(b1.lo < b2.lo ? Ordering::less : Ordering::greater, b1,
                     b2);
    }
    if (b1.exact()) {
      if (auto o = point_vs_bracket(b1.lo, p2, b2)) return outcome(*o, b1, b2);
      continue;
    }
    if (b2.exact()) {
      if (auto o = point_vs_bracket(b2.lo, p1, b1)) {
        const Ordering flipped = *o == Ordering::less    ? Ordering::greater
                                 : *o == Ordering::greater ? Ordering::less
                                                           : Ordering::equal;
        return outcome(flipped, b1, b2);
      }
      continue;
    }
    if (b1.hi <= b2.lo) return outcome(Ordering::less, b1, b2);
    if (b2.hi <= b1.lo) return outcome(Ordering::greater, b1, b2);
    if (b1.width() < separation_floor() && b2.width() < separation_floor())
      break;
    refine_step(p1, b1);
    refine_step(p2, b2);
  }

  // Could not separate: the roots are equal exactly when they are a common
  // root, i.e. a root of gcd(p1, p2) inside the overlap.
  if (p1 == p2) return outcome(Ordering::equal, b1, b2);
  const Polynomial g = poly_gcd(p1, p2);
  if (g.degree() >= 1) {
    const Rational lo = std::max(b1.lo, b2.lo);
    const Rational hi = std::min(b1.hi, b2.hi);
    const int s_lo = g.sign_at(lo);
    const int s_hi = g.sign_at(hi);
    if (s_lo == 0 || s_hi == 0 || s_lo != s_hi)
      return outcome(Ordering::equal, b1, b2);
  }
  throw UnresolvedError("largest roots neither separable nor provably equal");
}

CompareOutcome compare_rho_detailed(const Polynomial& p1, const Polynomial& p2) {
  const Rational one(1);
  const Rational coarse(1, 16);
  auto seed = [&](const Polynomial& p) {
    if (p.is_zero() || !p.is_monic() || p.sign_at(one) >= 0)
      throw PreconditionError(
          "compare_rho requires monic polynomials negative at 1");
    return bracket_increasing_root(p, one, coarse);
  };
  return compare_bracketed(p1, seed(p1), p2, seed(p2));
}

Ordering compare_rho(const Polynomial& p1, const Polynomial& p2) {
  return compare_rho_detailed(p1, p2).order;
}

}  // namespace spectra
