#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gqp/errors.hpp"
#include "gqp/rational.hpp"

namespace gqp {

// Polynomial in a formal infinitesimal eps, rational coefficients, exact
// arithmetic. coeff(k) multiplies eps^k. The zero polynomial has degree() -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant) : c_{std::move(constant)} { trim(); }

  static Poly eps_power(std::size_t k, Rational coeff = Rational(1)) {
    Poly p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = std::move(coeff);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Index of the lowest-order nonzero coefficient.
  std::size_t ord() const {
    if (is_zero()) throw precondition_error("ord of zero polynomial");
    std::size_t k = 0;
    while (c_[k] == 0) ++k;
    return k;
  }

  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }

  // Sign of the value for all sufficiently small eps > 0: the sign of the
  // lowest-order nonzero coefficient.
  int sign() const { return is_zero() ? 0 : c_[ord()].sign(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Element of the ordered field of rational functions in eps, represented as a
// ratio of polynomials. The order is the one induced by "eps is positive but
// smaller than every positive rational": a quantity is positive iff its
// lowest-order nonzero coefficient is (after clearing the denominator).
//
// Invariants kept by normalize(): den is nonzero with positive sign, and a
// constant denominator is scaled away entirely (den == 1), so polynomial
// values round-trip as polynomials. Fractions are not reduced further; all
// observations (sign, equality, standard part) only need lowest-order data,
// which common polynomial factors cannot change.
class EpsilonNumber {
 public:
  EpsilonNumber() : den_(Rational(1)) {}
  EpsilonNumber(const Rational& q) : num_(q), den_(Rational(1)) {}
  explicit EpsilonNumber(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  EpsilonNumber(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("EpsilonNumber with zero denominator");
    normalize();
  }

  static EpsilonNumber epsilon(std::size_t k = 1) {
    return EpsilonNumber(Poly::eps_power(k));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }  // den_ is positive by invariant

  // Value stays bounded as eps -> 0+.
  bool is_finite() const { return num_.is_zero() || num_.ord() >= den_.ord(); }
  // Value tends to 0 as eps -> 0+.
  bool is_infinitesimal() const { return num_.is_zero() || num_.ord() > den_.ord(); }

  // The limit as eps -> 0+; only defined for finite values.
  Rational standard_part() const {
    if (!is_finite()) throw precondition_error("standard_part of an infinite value");
    if (is_infinitesimal()) return Rational(0);
    return num_.coeff(num_.ord()) / den_.coeff(den_.ord());
  }

  bool is_polynomial() const { return den_ == Poly(Rational(1)); }
  const Poly& polynomial() const {
    if (!is_polynomial()) throw precondition_error("not a polynomial value");
    return num_;
  }

  bool is_rational() const { return is_polynomial() && num_.degree() <= 0; }
  Rational as_rational() const {
    if (!is_rational()) throw precondition_error("not a rational value");
    return num_.coeff(0);
  }

  EpsilonNumber operator-() const { return EpsilonNumber(-num_, den_); }

  friend EpsilonNumber operator+(const EpsilonNumber& a, const EpsilonNumber& b) {
    return EpsilonNumber(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend EpsilonNumber operator-(const EpsilonNumber& a, const EpsilonNumber& b) {
    return a + (-b);
  }
  friend EpsilonNumber operator*(const EpsilonNumber& a, const EpsilonNumber& b) {
    return EpsilonNumber(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend EpsilonNumber operator/(const EpsilonNumber& a, const EpsilonNumber& b) {
    if (b.is_zero()) throw input_error("EpsilonNumber division by zero");
    return EpsilonNumber(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const EpsilonNumber& a, const EpsilonNumber& b) {
    return (a - b).is_zero();
  }
  friend bool operator<(const EpsilonNumber& a, const EpsilonNumber& b) {
    return (b - a).sign() > 0;
  }
  friend bool operator<=(const EpsilonNumber& a, const EpsilonNumber& b) {
    return (b - a).sign() >= 0;
  }
  friend bool operator>(const EpsilonNumber& a, const EpsilonNumber& b) { return b < a; }
  friend bool operator>=(const EpsilonNumber& a, const EpsilonNumber& b) { return b <= a; }

 private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_.degree() == 0 && !(den_ == Poly(Rational(1)))) {
      Rational c = den_.coeff(0);
      Poly scaled;
      for (int k = 0; k <= num_.degree(); ++k)
        scaled = scaled + Poly::eps_power(static_cast<std::size_t>(k), num_.coeff(k) / c);
      num_ = scaled;
      den_ = Poly(Rational(1));
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace gqp
