#pragma once

#include <ostream>

#include "qlat/laurent.hpp"

namespace qlat {

// Element even + odd*t of Z[q, q^-1, t] / (t^2 - 1).
struct QTElement {
  LaurentPoly even;
  LaurentPoly odd;

  QTElement() = default;
  QTElement(long c) : even(c) {}  // NOLINT(google-explicit-constructor)
  QTElement(LaurentPoly e) : even(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  QTElement(LaurentPoly e, LaurentPoly o) : even(std::move(e)), odd(std::move(o)) {}

  static QTElement t() { return {LaurentPoly(), LaurentPoly(1)}; }
  // q^k t^parity
  static QTElement monomial(int q_deg, int t_parity) {
    LaurentPoly m = LaurentPoly::q(q_deg);
    return (t_parity & 1) ? QTElement(LaurentPoly(), m) : QTElement(m);
  }

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }

  QTElement& operator+=(const QTElement& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  QTElement& operator-=(const QTElement& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
  }
  QTElement& operator*=(const QTElement& o) { return *this = *this * o; }

  friend QTElement operator+(QTElement a, const QTElement& b) { return a += b; }
  friend QTElement operator-(QTElement a, const QTElement& b) { return a -= b; }
  friend QTElement operator-(const QTElement& a) { return {-a.even, -a.odd}; }
  friend QTElement operator*(const QTElement& a, const QTElement& b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
  }
  friend bool operator==(const QTElement& a, const QTElement& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  friend bool operator!=(const QTElement& a, const QTElement& b) { return !(a == b); }
};

// q -> q^-1, t fixed.
inline QTElement bar(const QTElement& x) { return {bar(x.even), bar(x.odd)}; }
inline QTElement negate_q(const QTElement& x) { return {negate_q(x.even), negate_q(x.odd)}; }
inline QTElement koszul_substitute(const QTElement& x) { return negate_q(bar(x)); }

// t -> +1 or -1.
LaurentPoly at_t(const QTElement& x, int t_sign);

// Rebuilds x from its two t-specializations; throws InexactDivision when
// (at_plus, at_minus) is not the image of an element of the ring.
QTElement from_t_specializations(const LaurentPoly& at_plus, const LaurentPoly& at_minus);

enum class Spec { keep, plus_one, minus_one };

// Exact substitution of q and/or t by ±1. The result stays a QTElement; when
// both are specialized it is a constant (see full_specialize).
QTElement specialize(const QTElement& x, Spec q, Spec t);
Integer full_specialize(const QTElement& x, int q_sign, int t_sign);

std::ostream& operator<<(std::ostream& os, const QTElement& x);

}  // namespace qlat
