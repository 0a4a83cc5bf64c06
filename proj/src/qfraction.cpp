#include "qlat/qfraction.hpp"

#include <utility>
#include <vector>

#include "qlat/errors.hpp"

namespace qlat {
namespace {

using Coeffs = std::vector<Integer>;  // low degree first, no trailing zeros

int degree(const Coeffs& p) { return static_cast<int>(p.size()) - 1; }

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const Coeffs& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Coeffs divide_scalar(Coeffs p, const Integer& s) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return p;
}

Coeffs primitive_part(const Coeffs& p) {
  if (p.empty()) return p;
  Coeffs r = divide_scalar(p, content(p));
  if (r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

Integer ipow(const Integer& b, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Exact pseudo-remainder with the full factor lc(b)^(da-db+1), as required by
// the subresultant recurrence.
Coeffs full_prem(const Coeffs& a, const Coeffs& b) {
  const int da = degree(a), db = degree(b);
  Coeffs r = a;
  int steps = 0;
  const Integer& lead = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const Integer top = r.back();
    for (auto& c : r) c *= lead;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= top * b[static_cast<std::size_t>(j)];
    r.pop_back();  // leading term cancels exactly
    trim(r);
    ++steps;
  }
  const int missing = da - db + 1 - steps;
  if (missing > 0) {
    const Integer f = ipow(lead, missing);
    for (auto& c : r) c *= f;
  }
  return r;
}

// gcd of primitive polynomials via the subresultant PRS.
Coeffs subresultant_gcd(Coeffs a, Coeffs b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  if (b.empty()) return primitive_part(a);
  Integer g = 1, h = 1;
  for (;;) {
    const int delta = degree(a) - degree(b);
    Coeffs r = full_prem(a, b);
    if (r.empty()) return primitive_part(b);
    if (degree(r) == 0) return Coeffs{1};
    const Integer scale = g * ipow(h, delta);
    a = std::move(b);
    b = divide_scalar(std::move(r), scale);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& x = a.is_zero() ? b : a;
    Coeffs c = x.coeffs();
    if (c.back() < 0)
      for (auto& v : c) v = -v;
    return LaurentPoly(0, std::move(c));
  }
  Integer cg;
  const Integer ca = content(a.coeffs()), cb = content(b.coeffs());
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Coeffs g = subresultant_gcd(primitive_part(a.coeffs()), primitive_part(b.coeffs()));
  for (auto& c : g) c *= cg;
  return LaurentPoly(0, std::move(g));
}

QFraction frac_reduce(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("frac_reduce: zero denominator");
  QFraction r;
  if (num.is_zero()) return r;
  // Move the q-power of den into num.
  LaurentPoly n = num.shifted(-den.min_deg());
  LaurentPoly d = den.shifted(-den.min_deg());
  const LaurentPoly g = poly_gcd(n, d);
  if (g != LaurentPoly(1)) {
    n = *exact_divide(n, g);
    d = *exact_divide(d, g);
  }
  if (d.coeffs().back() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

QFraction& QFraction::operator+=(const QFraction& o) {
  return *this = frac_reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QFraction& QFraction::operator-=(const QFraction& o) {
  return *this = frac_reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QFraction& QFraction::operator*=(const QFraction& o) {
  return *this = frac_reduce(num_ * o.num_, den_ * o.den_);
}

QFraction& QFraction::operator/=(const QFraction& o) {
  if (o.is_zero()) throw DivisionByZero("QFraction: division by zero");
  return *this = frac_reduce(num_ * o.den_, den_ * o.num_);
}

QFraction operator-(const QFraction& a) {
  QFraction r = a;
  r.num_ = -r.num_;
  return r;
}

QFraction bar(const QFraction& x) { return frac_reduce(bar(x.num()), bar(x.den())); }

QFraction inverse(const QFraction& x) { return frac_reduce(x.den(), x.num()); }

std::ostream& operator<<(std::ostream& os, const QFraction& x) {
  if (x.is_laurent()) return os << x.num();
  return os << '(' << x.num() << ")/(" << x.den() << ')';
}

}  // namespace qlat
