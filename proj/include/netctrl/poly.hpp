#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "netctrl/rational.hpp"

namespace netctrl {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  /// s - root
  static Poly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of s^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& s) const;
  std::complex<double> eval(std::complex<double> s) const;

  Poly monic() const;
  /// Integer coefficients with unit content and positive leading coefficient.
  Poly primitive() const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned k) const;

  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(p, 0) = monic(p) and gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

struct RationalRoots {
  /// Rational roots repeated by multiplicity, ascending.
  std::vector<Rational> roots;
  /// p divided by every (s - r); carries the irrational/complex part.
  Poly quotient;
};

/// Throws std::invalid_argument for the zero polynomial.
RationalRoots rational_roots(const Poly& p);

/// Divides d by gcd(d, chi) until the two are coprime. Result is monic.
Poly strip_factors(const Poly& d, const Poly& chi);

}  // namespace netctrl
