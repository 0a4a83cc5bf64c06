#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlat/bipartite.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

/**
 * Free Z[q,q^-1]-module with a Gram matrix in a chosen basis. The pairing is
 * antilinear in the first argument: <x, y> = x* A y.
 */
class QLattice {
 public:
  QLattice() = default;
  // Throws DimensionError unless gram is square and labels (if any) match.
  explicit QLattice(LaurentMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const LaurentMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // <x, y> for coordinate vectors in this basis.
  LaurentPoly pair(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const;

 private:
  LaurentMatrix gram_;
  std::vector<std::string> labels_;
};

// Closed forms built from the classical pairings: diagonal 1 + (p_ii - 1) q^2,
// off-diagonal p_ij q^2.
QLattice flow_qlattice(const SignedBipartiteGraph& b);
QLattice cut_qlattice(const SignedBipartiteGraph& b);

// The same lattices read off the Euler form at t = -1. Projective classes of
// E1 give the flow Gram directly; simple classes of E0 give the bar of the cut Gram.
LaurentMatrix flow_gram_from_k0(const SignedBipartiteGraph& b);
LaurentMatrix cut_gram_from_k0(const SignedBipartiteGraph& b);

// Gram becomes T* A T; T must have unit determinant (NonUnitDeterminant otherwise).
QLattice change_basis(const QLattice& l, const LaurentMatrix& t);

// normalize_unit(det(gram)).normalized; 1 for rank 0.
LaurentPoly normalized_det(const QLattice& l);
bool is_unimodular(const QLattice& l);

enum class DualSide { left, right };

// Columns are the dual basis vectors in the original coordinates.
// right: <b_i, b_j^v> = delta_ij, columns of A^-1.
// left:  <vb_j, b_i> = delta_ij, columns of (A*)^-1 (= bar(A)^-1 for symmetric A).
FractionMatrix dual_basis(const QLattice& l, DualSide side);

// c such that <x, x> = 1 + c q^k exactly, if any.
std::optional<Integer> norm_shape(const QLattice& l, const std::vector<LaurentPoly>& x, int k = 2);

struct SignedPermutation {
  std::vector<std::size_t> perm;  // column a has its nonzero entry in row perm[a]
  std::vector<int> signs;

  LaurentMatrix matrix() const;
};

// Throws HypothesisError unless the Gram is symmetric with diagonal entries
// 1 + c q^k and off-diagonal entries c q^k.
void check_rigid_shape(const QLattice& l, int k = 2);

// Signed permutation P with gram2 = P^t gram1 P, or nullopt. Branches try
// perm[a] in increasing order and sign +1 before -1, so the first witness is
// the lexicographically least in that order.
std::optional<SignedPermutation> decide_iso(const QLattice& l1, const QLattice& l2, int k = 2);

}  // namespace qlat
