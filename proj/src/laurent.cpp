#include "qlat/laurent.hpp"

#include <algorithm>
#include <cstdlib>

#include "qlat/errors.hpp"

namespace qlat {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int min_deg, std::vector<Integer> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly::LaurentPoly(int min_deg, std::initializer_list<long> coeffs) : min_deg_(min_deg) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int k) {
  return LaurentPoly(k, std::vector<Integer>{c});
}

void LaurentPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  const auto lead = static_cast<int>(first - coeffs_.begin());
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    min_deg_ += lead;
  }
}

Integer LaurentPoly::coeff(int k) const {
  if (k < min_deg_ || k > max_deg()) return 0;
  return coeffs_[static_cast<std::size_t>(k - min_deg_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_deg_ += k;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_deg_, o.min_deg_);
  const int hi = std::max(max_deg(), o.max_deg());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_deg_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.min_deg_ - lo) + i] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.min_deg_ + b.min_deg_, std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly bar(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Integer> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly(-p.max_deg(), std::move(rev));
}

LaurentPoly negate_q(const LaurentPoly& p) {
  std::vector<Integer> out = p.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int k = p.min_deg() + static_cast<int>(i);
    if (k % 2 != 0) out[i] = -out[i];
  }
  return LaurentPoly(p.min_deg(), std::move(out));
}

Integer evaluate_at_sign(const LaurentPoly& p, int q_sign) {
  if (q_sign != 1 && q_sign != -1) throw Error("evaluate_at_sign: q must be +1 or -1");
  Integer sum = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const int k = p.min_deg() + static_cast<int>(i);
    if (q_sign == -1 && k % 2 != 0)
      sum -= p.coeffs()[i];
    else
      sum += p.coeffs()[i];
  }
  return sum;
}

UnitSplit normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly(1), LaurentPoly()};
  const Integer& low = p.coeffs().front();
  const long sign = low > 0 ? 1 : -1;
  LaurentPoly unit = LaurentPoly::monomial(sign, p.min_deg());
  std::vector<Integer> c = p.coeffs();
  if (sign < 0)
    for (auto& x : c) x = -x;
  return {unit, LaurentPoly(0, std::move(c))};
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("exact_divide: division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Both coefficient vectors have nonzero constant terms, so the quotient is a
  // polynomial with nonzero constant term; long division from the top.
  std::vector<Integer> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<Integer> quot(rem.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return LaurentPoly(a.min_deg() - b.min_deg(), std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const int k = p.min_deg() + static_cast<int>(i);
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const Integer mag = abs(c);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (k != 1) os << '^' << k;
  }
  return os;
}

}  // namespace qlat
