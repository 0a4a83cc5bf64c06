#include "qlat/linalg.hpp"

#include <algorithm>
#include <utility>

#include "qlat/errors.hpp"

namespace qlat {
namespace {

void require_square(std::size_t r, std::size_t c, const char* what) {
  if (r != c) throw DimensionError(std::string(what) + ": matrix is not square");
}

LaurentPoly det_cofactor_rec(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly sum;
  std::vector<std::size_t> rows(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    LaurentPoly term = m(0, j) * det_cofactor_rec(m.select(rows, cols));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

LaurentMatrix minor_matrix(const LaurentMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != skip_row) rs.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != skip_col) cs.push_back(j);
  return m.select(rs, cs);
}

}  // namespace

LaurentMatrix to_laurent(const IntMatrix& m) {
  return m.map([](const Integer& x) { return LaurentPoly(x); });
}

QTMatrix to_qt(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& x) { return QTElement(x); });
}

FractionMatrix to_fraction(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& x) { return QFraction(x); });
}

LaurentMatrix at_t(const QTMatrix& m, int t_sign) {
  return m.map([t_sign](const QTElement& x) { return at_t(x, t_sign); });
}

QTMatrix specialize(const QTMatrix& m, Spec q, Spec t) {
  return m.map([q, t](const QTElement& x) { return specialize(x, q, t); });
}

QTMatrix koszul_substitute(const QTMatrix& m) {
  return m.map([](const QTElement& x) { return koszul_substitute(x); });
}

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  return det_cofactor_rec(m);
}

LaurentPoly det_bareiss(const LaurentMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  // Clear negative powers row by row so the elimination runs in Z[q]; the
  // extracted q-power is restored at the end.
  LaurentMatrix a = m;
  int extracted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    int low = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      low = any ? std::min(low, a(i, j).min_deg()) : a(i, j).min_deg();
      any = true;
    }
    if (!any) return {};
    for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j).shifted(-low);
    extracted += low;
  }
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = exact_divide(v, prev);
        if (!q) throw InexactDivision("Bareiss step produced an inexact quotient");
        a(i, j) = std::move(*q);
      }
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1).shifted(extracted);
  return negate ? -d : d;
}

LaurentPoly det(const LaurentMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  return m.rows() <= 4 ? det_cofactor_rec(m) : det_bareiss(m);
}

QTElement det(const QTMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  return from_t_specializations(det(at_t(m, 1)), det(at_t(m, -1)));
}

QFraction det(const FractionMatrix& m) {
  require_square(m.rows(), m.cols(), "det");
  FractionMatrix a = m;
  const std::size_t n = a.rows();
  QFraction d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return QFraction();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const QFraction f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

LaurentMatrix inverse_unit(const LaurentMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  const LaurentPoly d = det(m);
  if (d.is_zero()) throw SingularMatrix("inverse: matrix is singular");
  if (!d.is_unit())
    throw NonUnitDeterminant("inverse: determinant is not a unit of Z[q,q^-1]; use fraction mode");
  const LaurentPoly d_inv = LaurentPoly::monomial(d.coeffs()[0], -d.min_deg());
  LaurentMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = d_inv;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly c = det(minor_matrix(m, j, i));
        if ((i + j) % 2 == 1) c = -c;
        inv(i, j) = c * d_inv;
      }
  }
  inv.set_row_labels(m.col_labels());
  inv.set_col_labels(m.row_labels());
  return inv;
}

QTMatrix inverse_unit(const QTMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const LaurentMatrix plus = inverse_unit(at_t(m, 1));
  const LaurentMatrix minus = inverse_unit(at_t(m, -1));
  QTMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      inv(i, j) = from_t_specializations(plus(i, j), minus(i, j));
  inv.set_row_labels(m.col_labels());
  inv.set_col_labels(m.row_labels());
  return inv;
}

FractionMatrix inverse_fraction(const FractionMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  FractionMatrix a = m;
  FractionMatrix inv = FractionMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw SingularMatrix("inverse: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    const QFraction pivot_inv = inverse(a(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pivot_inv;
      inv(k, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const QFraction f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  inv.set_row_labels(m.col_labels());
  inv.set_col_labels(m.row_labels());
  return inv;
}

FractionMatrix inverse_fraction(const LaurentMatrix& m) { return inverse_fraction(to_fraction(m)); }

bool is_laurent(const FractionMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_laurent()) return false;
  return true;
}

LaurentMatrix to_laurent(const FractionMatrix& m) {
  if (!is_laurent(m)) throw InexactDivision("matrix has non-Laurent entries");
  return m.map([](const QFraction& x) { return x.num(); });
}

}  // namespace qlat
