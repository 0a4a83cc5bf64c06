#include "qlat/qt_element.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "qlat/errors.hpp"

namespace qlat {

LaurentPoly at_t(const QTElement& x, int t_sign) {
  if (t_sign == 1) return x.even + x.odd;
  if (t_sign == -1) return x.even - x.odd;
  throw Error("at_t: t must be +1 or -1");
}

QTElement from_t_specializations(const LaurentPoly& at_plus, const LaurentPoly& at_minus) {
  auto even = exact_divide(at_plus + at_minus, LaurentPoly(2));
  auto odd = exact_divide(at_plus - at_minus, LaurentPoly(2));
  if (!even || !odd)
    throw InexactDivision("t-specializations do not lift to Z[q,q^-1,t]/(t^2-1)");
  return {*even, *odd};
}

namespace {

LaurentPoly specialize_q(const LaurentPoly& p, Spec q) {
  switch (q) {
    case Spec::keep:
      return p;
    case Spec::plus_one:
      return LaurentPoly(evaluate_at_sign(p, 1));
    case Spec::minus_one:
      return LaurentPoly(evaluate_at_sign(p, -1));
  }
  return p;
}

}  // namespace

QTElement specialize(const QTElement& x, Spec q, Spec t) {
  QTElement y{specialize_q(x.even, q), specialize_q(x.odd, q)};
  switch (t) {
    case Spec::keep:
      return y;
    case Spec::plus_one:
      return QTElement(at_t(y, 1));
    case Spec::minus_one:
      return QTElement(at_t(y, -1));
  }
  return y;
}

Integer full_specialize(const QTElement& x, int q_sign, int t_sign) {
  return evaluate_at_sign(at_t(x, t_sign), q_sign);
}

std::ostream& operator<<(std::ostream& os, const QTElement& x) {
  if (x.is_zero()) return os << '0';
  std::vector<std::tuple<int, int, Integer>> terms;
  for (int parity = 0; parity < 2; ++parity) {
    const LaurentPoly& p = parity == 0 ? x.even : x.odd;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (p.coeffs()[i] != 0)
        terms.emplace_back(p.min_deg() + static_cast<int>(i), parity, p.coeffs()[i]);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  bool first = true;
  for (const auto& [k, parity, c] : terms) {
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const Integer mag = abs(c);
    bool wrote = false;
    if (mag != 1 || (k == 0 && parity == 0)) {
      os << mag;
      wrote = true;
    }
    if (k != 0) {
      os << (wrote ? "*" : "") << 'q';
      if (k != 1) os << '^' << k;
      wrote = true;
    }
    if (parity == 1) os << (wrote ? "*" : "") << 't';
  }
  return os;
}

}  // namespace qlat
