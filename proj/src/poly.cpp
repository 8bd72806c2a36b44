#include "netctrl/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netctrl {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({Rational(-root), Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::eval(const Rational& s) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->get_d();
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(coeffs_.size());
  BigInt content = 0;
  for (const auto& c : coeffs_) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (coeffs_.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(BigInt(v / content));
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) {
      bool paren = mag.get_den() != 1 && k > 0;
      if (paren) os << "(";
      os << netctrl::to_string(mag);
      if (paren) os << ")";
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational factor = rem[k] / lead;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p.primitive();
  Poly b = q.primitive();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

namespace {

std::vector<BigInt> integer_coeffs(const Poly& primitive) {
  std::vector<BigInt> out;
  out.reserve(primitive.coeffs().size());
  for (const auto& c : primitive.coeffs()) out.push_back(c.get_num());
  return out;
}

bool perfect_square(const BigInt& v, BigInt& root) {
  if (v < 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root * root == v;
}

// Real parts of the approximate roots of a square-free integer polynomial,
// polished by Newton iteration in extended precision.
std::vector<mpf_class> approximate_real_roots(const std::vector<BigInt>& c) {
  const std::size_t deg = c.size() - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  const Rational lead(c.back());
  for (std::size_t i = 0; i < deg; ++i) {
    companion(0, static_cast<Eigen::Index>(deg - 1 - i)) = -Rational(c[i] / lead).get_d();
    if (i + 1 < deg) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<mpf_class> out;
  constexpr mp_bitcnt_t kBits = 512;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    std::complex<double> z = es.eigenvalues()(k);
    if (std::abs(z.imag()) > 1e-3 * std::max(1.0, std::abs(z))) continue;
    mpf_class x(z.real(), kBits);
    for (int it = 0; it < 200; ++it) {
      mpf_class f(0, kBits), df(0, kBits);
      for (std::size_t i = c.size(); i-- > 0;) {
        df = df * x + f;
        f = f * x + mpf_class(c[i], kBits);
      }
      if (df == 0) break;
      mpf_class step = f / df;
      x -= step;
      if (abs(step) <= abs(x) * mpf_class("1e-120", kBits) + mpf_class("1e-140", kBits)) break;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RationalRoots result;
  Poly work = p.primitive();

  std::size_t zeros = 0;
  while (work.coeffs()[zeros] == 0) ++zeros;
  if (zeros > 0) {
    work = Poly(std::vector<Rational>(work.coeffs().begin() + static_cast<long>(zeros), work.coeffs().end()));
  }

  std::vector<Rational> distinct;
  Poly squarefree = divmod(work, poly_gcd(work, work.derivative())).first.primitive();
  while (squarefree.degree() >= 1) {
    std::vector<BigInt> c = integer_coeffs(squarefree);
    std::vector<Rational> found;
    if (squarefree.degree() == 1) {
      found.push_back(Rational(-c[0], c[1]));
    } else if (squarefree.degree() == 2) {
      BigInt disc = c[1] * c[1] - 4 * c[2] * c[0];
      BigInt root;
      if (perfect_square(disc, root)) {
        found.push_back(Rational(-c[1] - root, 2 * c[2]));
        found.push_back(Rational(-c[1] + root, 2 * c[2]));
      }
    } else {
      // r = t / lead with t an integer root of the monic transform, so the
      // rounded lead * x is the only integer candidate near x.
      for (const auto& x : approximate_real_roots(c)) {
        mpf_class scaled = x * mpf_class(c.back(), x.get_prec());
        mpf_class rounded = floor(scaled + 0.5);
        BigInt t(rounded);
        for (int delta = -1; delta <= 1; ++delta) {
          Rational candidate(BigInt(t + delta), c.back());
          candidate.canonicalize();
          if (squarefree.eval(candidate) == 0 &&
              std::find(found.begin(), found.end(), candidate) == found.end()) {
            found.push_back(candidate);
          }
        }
      }
    }
    for (auto& r : found) r.canonicalize();
    if (found.empty()) break;
    for (const auto& r : found) {
      distinct.push_back(r);
      squarefree = divmod(squarefree, Poly::linear_factor(r)).first.primitive();
    }
  }

  Poly quotient = p;
  for (std::size_t i = 0; i < zeros; ++i) {
    result.roots.emplace_back(0);
    quotient = divmod(quotient, Poly::linear_factor(0)).first;
  }
  for (const auto& r : distinct) {
    const Poly factor = Poly::linear_factor(r);
    while (quotient.degree() >= 1) {
      auto [q, rem] = divmod(quotient, factor);
      if (!rem.is_zero()) break;
      result.roots.push_back(r);
      quotient = std::move(q);
    }
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.quotient = std::move(quotient);
  return result;
}

Poly strip_factors(const Poly& d, const Poly& chi) {
  if (d.is_zero() || chi.is_zero()) throw std::invalid_argument("strip_factors requires nonzero polynomials");
  Poly out = d.monic();
  for (;;) {
    Poly g = poly_gcd(out, chi);
    if (g.degree() <= 0) return out;
    out = divmod(out, g).first.monic();
  }
}

}  // namespace netctrl
