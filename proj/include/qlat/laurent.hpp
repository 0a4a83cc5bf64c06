#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace qlat {

using Integer = mpz_class;

/**
 * Element of Z[q, q^-1] with arbitrary-precision coefficients.
 *
 * Stored as q^min_deg * (c_0 + c_1 q + ... + c_m q^m). The representation is
 * canonical: c_0 and c_m are nonzero, and the zero polynomial has no
 * coefficients and min_deg 0. Equality is therefore structural.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int min_deg, std::vector<Integer> coeffs);
  LaurentPoly(int min_deg, std::initializer_list<long> coeffs);

  static LaurentPoly monomial(const Integer& c, int k);
  // q^k
  static LaurentPoly q(int k = 1) { return monomial(1, k); }

  int min_deg() const { return min_deg_; }
  // Largest exponent with a nonzero coefficient; min_deg() - 1 for zero.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int k) const;
  std::size_t term_count() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && (is_zero() || min_deg_ == 0); }
  // True iff the polynomial is ±q^k.
  bool is_unit() const;

  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void canonicalize();

  int min_deg_ = 0;
  std::vector<Integer> coeffs_;
};

// q -> q^-1.
LaurentPoly bar(const LaurentPoly& p);
// q -> -q.
LaurentPoly negate_q(const LaurentPoly& p);
// q -> -q^-1.
inline LaurentPoly koszul_substitute(const LaurentPoly& p) { return negate_q(bar(p)); }

// Value at q = +1 or q = -1.
Integer evaluate_at_sign(const LaurentPoly& p, int q_sign);

struct UnitSplit {
  LaurentPoly unit;        // ±q^k
  LaurentPoly normalized;  // min_deg 0, positive lowest coefficient
};

// p = unit * normalized; zero maps to (1, 0).
UnitSplit normalize_unit(const LaurentPoly& p);

// Returns a / b when b divides a in Z[q, q^-1], nullopt otherwise.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Text form "c*q^k" summed in increasing degree, e.g. "1 + 2*q^2 - q^-1".
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qlat
