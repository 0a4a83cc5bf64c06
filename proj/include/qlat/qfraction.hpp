#pragma once

#include <ostream>

#include "qlat/laurent.hpp"

namespace qlat {

/**
 * Element of the fraction field Q(q), stored as num / den in lowest terms.
 *
 * Canonical form: den is a polynomial with nonzero constant term (powers of q
 * are units and live in num) and positive leading coefficient, and num and den
 * share no common factor in Z[q], including integer content. Every element has
 * exactly one such representative, so equality is structural.
 */
class QFraction {
 public:
  QFraction() : den_(1) {}
  QFraction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QFraction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // True when the value lies in Z[q, q^-1].
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  QFraction& operator+=(const QFraction& o);
  QFraction& operator-=(const QFraction& o);
  QFraction& operator*=(const QFraction& o);
  QFraction& operator/=(const QFraction& o);

  friend QFraction operator+(QFraction a, const QFraction& b) { return a += b; }
  friend QFraction operator-(QFraction a, const QFraction& b) { return a -= b; }
  friend QFraction operator*(QFraction a, const QFraction& b) { return a *= b; }
  friend QFraction operator/(QFraction a, const QFraction& b) { return a /= b; }
  friend QFraction operator-(const QFraction& a);
  friend bool operator==(const QFraction& a, const QFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QFraction& a, const QFraction& b) { return !(a == b); }

  friend QFraction frac_reduce(const LaurentPoly& num, const LaurentPoly& den);

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// num / den in canonical form; throws DivisionByZero when den == 0.
QFraction frac_reduce(const LaurentPoly& num, const LaurentPoly& den);

QFraction bar(const QFraction& x);
QFraction inverse(const QFraction& x);

// gcd in Z[q] of two polynomials (min_deg >= 0 after stripping q-powers),
// normalized to positive leading coefficient. Subresultant PRS on primitive
// parts times the gcd of contents.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const QFraction& x);

}  // namespace qlat
