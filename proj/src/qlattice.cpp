#include "qlat/qlattice.hpp"

#include <algorithm>

#include "qlat/algebra.hpp"
#include "qlat/errors.hpp"

namespace qlat {

QLattice::QLattice(LaurentMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_square()) throw DimensionError("Gram matrix must be square");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw DimensionError("label count does not match the rank");
}

LaurentPoly QLattice::pair(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const {
  if (x.size() != rank() || y.size() != rank()) throw DimensionError("coordinate vector has wrong length");
  const auto ay = gram_ * y;
  LaurentPoly s;
  for (std::size_t k = 0; k < x.size(); ++k) s += bar(x[k]) * ay[k];
  return s;
}

namespace {

QLattice from_classical(const IntMatrix& p) {
  const LaurentPoly q2 = LaurentPoly::q(2);
  LaurentMatrix g(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      g(i, j) = i == j ? LaurentPoly(1) + LaurentPoly(Integer(p(i, j) - 1)) * q2 : LaurentPoly(p(i, j)) * q2;
  g.set_labels(p.row_labels());
  return QLattice(std::move(g), p.row_labels());
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t k = from; k < to; ++k) r.push_back(k);
  return r;
}

}  // namespace

QLattice flow_qlattice(const SignedBipartiteGraph& b) { return from_classical(classical_gram(b, Side::flow)); }

QLattice cut_qlattice(const SignedBipartiteGraph& b) { return from_classical(classical_gram(b, Side::cut)); }

LaurentMatrix flow_gram_from_k0(const SignedBipartiteGraph& b) {
  const auto e1 = range(b.part0().size(), b.size());
  return at_t(k0_gram(b), -1).select(e1, e1);
}

LaurentMatrix cut_gram_from_k0(const SignedBipartiteGraph& b) {
  const auto e0 = range(0, b.part0().size());
  return qlat::bar(at_t(euler_gram(b, Basis::simple), -1).select(e0, e0));
}

QLattice change_basis(const QLattice& l, const LaurentMatrix& t) {
  if (!t.is_square() || t.rows() != l.rank()) throw DimensionError("change of basis has wrong shape");
  if (!det(t).is_unit()) throw NonUnitDeterminant("change of basis is not invertible over Z[q,q^-1]");
  return QLattice(star(t) * l.gram() * t);
}

LaurentPoly normalized_det(const QLattice& l) { return normalize_unit(det(l.gram())).normalized; }

bool is_unimodular(const QLattice& l) { return det(l.gram()).is_unit(); }

FractionMatrix dual_basis(const QLattice& l, DualSide side) {
  return inverse_fraction(side == DualSide::right ? l.gram() : star(l.gram()));
}

std::optional<Integer> norm_shape(const QLattice& l, const std::vector<LaurentPoly>& x, int k) {
  const LaurentPoly n = l.pair(x, x) - LaurentPoly(1);
  if (n.is_zero()) return Integer(0);
  if (n.term_count() != 1 || n.min_deg() != k) return std::nullopt;
  return n.coeff(k);
}

LaurentMatrix SignedPermutation::matrix() const {
  LaurentMatrix m(perm.size(), perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) m(perm[a], a) = LaurentPoly(signs[a]);
  return m;
}

void check_rigid_shape(const QLattice& l, int k) {
  const LaurentMatrix& g = l.gram();
  auto where = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j) != g(j, i)) throw HypothesisError("Gram entry " + where(i, j) + " breaks symmetry");
      const LaurentPoly rest = i == j ? g(i, j) - LaurentPoly(1) : g(i, j);
      if (!rest.is_zero() && (rest.term_count() != 1 || rest.min_deg() != k))
        throw HypothesisError("Gram entry " + where(i, j) + " is not of the form " +
                              std::string(i == j ? "1 + " : "") + "c*q^" + std::to_string(k));
    }
}

namespace {

struct IsoSearch {
  const LaurentMatrix& g1;
  const LaurentMatrix& g2;
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  std::vector<bool> used;

  bool extend(std::size_t a) {
    const std::size_t n = g1.rows();
    if (a == n) return true;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p] || g1(p, p) != g2(a, a)) continue;
      for (int s : {1, -1}) {
        bool fits = true;
        for (std::size_t b = 0; b < a && fits; ++b) {
          const LaurentPoly& x = g1(p, perm[b]);
          fits = g2(a, b) == (s * signs[b] > 0 ? x : -x);
        }
        if (!fits) continue;
        perm[a] = p;
        signs[a] = s;
        used[p] = true;
        if (extend(a + 1)) return true;
        used[p] = false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<SignedPermutation> decide_iso(const QLattice& l1, const QLattice& l2, int k) {
  check_rigid_shape(l1, k);
  check_rigid_shape(l2, k);
  if (l1.rank() != l2.rank()) return std::nullopt;
  const std::size_t n = l1.rank();
  auto diag = [n, k](const LaurentMatrix& g) {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(g(i, i).coeff(k));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (diag(l1.gram()) != diag(l2.gram())) return std::nullopt;
  IsoSearch s{l1.gram(), l2.gram(), std::vector<std::size_t>(n), std::vector<int>(n), std::vector<bool>(n)};
  if (!s.extend(0)) return std::nullopt;
  return SignedPermutation{s.perm, s.signs};
}

}  // namespace qlat
