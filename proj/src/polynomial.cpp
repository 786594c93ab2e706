#include "spectra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

const Int kZero(0);

Int pow_int(Int base, int exp) {
  Int r(1);
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace

std::string decimal_string(const Rational& r, int digits) {
  Int num = numerator(r);
  Int den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  const Int scale = pow_int(Int(10), digits);
  Int q = num * scale / den;
  const Int rem = num * scale % den;
  if (rem * 2 >= den) ++q;
  std::ostringstream out;
  if (neg && q != 0) out << '-';
  out << Int(q / scale);
  if (digits > 0) {
    const std::string frac = Int(q % scale).str();
    out << '.' << std::string(digits - frac.size(), '0') << frac;
  }
  return out.str();
}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, Int coeff) {
  if (degree < 0) throw PreconditionError("monomial degree must be >= 0");
  std::vector<Int> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::term_count() const {
  int k = 0;
  for (const Int& c : coeffs_)
    if (c != 0) ++k;
  return k;
}

const Int& Polynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[d];
}

Int Polynomial::eval(const Int& x) const {
  Int acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const Int num = numerator(x);
  const Int den = denominator(x);
  // sum_i c_i num^i den^(n-i), same sign as p(x) since den > 0.
  Int acc = coeffs_.back();
  Int dpow(1);
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + coeffs_[i] * dpow;
  }
  return sign_of(acc);
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial();
  std::vector<Int> c(coeffs_.size() - 1);
  for (int i = 1; i <= degree(); ++i) c[i - 1] = coeffs_[i] * i;
  return Polynomial(std::move(c));
}

std::string Polynomial::dense_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    out << coeffs_[i];
  }
  return out.str();
}

std::string Polynomial::sparse_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag;
    if (d >= 1) {
      out << 'x';
      if (d >= 2) out << '^' << d;
    }
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Int> c(coeffs_);
  for (Int& v : c) v = -v;
  return Polynomial(std::move(c));
}

Rational poly_eval_rational(const Polynomial& p, const Rational& x) {
  return p.eval(x);
}

namespace {

// Primitive part with positive leading coefficient.
Polynomial normalize_primitive(std::vector<Rational> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (v.empty()) return Polynomial();
  Int lcm(1);
  for (const Rational& r : v) lcm = boost::multiprecision::lcm(lcm, denominator(r));
  std::vector<Int> c(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    c[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  Int g(0);
  for (const Int& x : c) g = boost::multiprecision::gcd(g, x);
  if (g == 0) g = 1;
  if (c.back() < 0) g = -g;
  for (Int& x : c) x /= g;
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> u(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> v(b.coeffs().begin(), b.coeffs().end());
  auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(u);
  trim(v);
  while (!v.empty()) {
    // u mod v over Q
    while (deg(u) >= deg(v) && !u.empty()) {
      const Rational q = u.back() / v.back();
      const int shift = deg(u) - deg(v);
      for (int i = 0; i <= deg(v); ++i) u[i + shift] -= q * v[i];
      u.pop_back();
      trim(u);
    }
    std::swap(u, v);
  }
  return normalize_primitive(std::move(u));
}

}  // namespace spectra
