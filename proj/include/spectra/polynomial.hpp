#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace spectra {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// Fixed-point decimal rendering of an exact rational, rounding half away
/// from zero. Deterministic at any precision, unlike printing a double.
std::string decimal_string(const Rational& r, int digits);

/// Dense univariate polynomial with exact integer coefficients, stored by
/// ascending degree with no trailing zeros. The zero polynomial has an
/// empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);

  static Polynomial monomial(int degree, Int coeff = Int(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  int term_count() const;

  /// Coefficient of x^d; zero outside the stored range.
  const Int& coeff(int d) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  Rational eval(const Rational& x) const;

  /// Exact sign of the value at x. Uses homogenized integer Horner, which
  /// avoids per-step rational normalization in bisection loops.
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;

  /// "c0 c1 ... cn" (ascending degree).
  std::string dense_string() const;
  /// Conventional sparse form, e.g. "x^4 - x - 1" or "x^6 - 2x - 1".
  std::string sparse_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Exact evaluation with no rounding.
Rational poly_eval_rational(const Polynomial& p, const Rational& x);

/// GCD over Q, normalized to a primitive integer polynomial with positive
/// leading coefficient. gcd(p, 0) = normalized p.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace spectra
