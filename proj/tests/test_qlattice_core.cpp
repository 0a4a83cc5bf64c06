#include <doctest.h>

#include "qlat/algebra.hpp"
#include "qlat/errors.hpp"
#include "qlat/family.hpp"
#include "qlat/qlattice.hpp"
#include "support.hpp"

using namespace qlat;

namespace {

const LaurentPoly one(1);
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly q2 = LaurentPoly::q(2);

OrientedMultigraph triangle() { return OrientedMultigraph(3, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}}); }
OrientedMultigraph theta() { return OrientedMultigraph(2, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}); }

SignedBipartiteGraph triangle_b() { return build_bipartite(triangle(), SpanningTree({1, 2})); }
SignedBipartiteGraph theta_b() { return build_bipartite(theta(), SpanningTree({1})); }

struct Instance {
  SignedBipartiteGraph b;
  bool graphical;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (const auto& g : bridgeless_family(5))
    for (const auto& t : enumerate_spanning_trees(g)) out.push_back({build_bipartite(g, t), true});
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it)
    out.push_back({testing::random_bipartite(rng, 1 + it % 4, 1 + (it / 4) % 4), false});
  return out;
}

LaurentMatrix at_q1(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& p) { return LaurentPoly(evaluate_at_sign(p, 1)); });
}

std::vector<LaurentPoly> unit_coords(std::size_t n, std::size_t k) {
  std::vector<LaurentPoly> v(n);
  v[k] = one;
  return v;
}

}  // namespace

TEST_CASE("flow and cut lattices") {
  CHECK(flow_qlattice(triangle_b()).gram() == LaurentMatrix{{1 + 2 * q2}});
  CHECK(cut_qlattice(triangle_b()).gram() == LaurentMatrix{{1 + q2, q2}, {q2, 1 + q2}});
  CHECK(flow_qlattice(theta_b()).gram() == LaurentMatrix{{1 + q2, q2}, {q2, 1 + q2}});
  CHECK(flow_qlattice(triangle_b()).labels() == std::vector<std::string>{"3"});
  CHECK(cut_qlattice(SignedBipartiteGraph({}, {1})).rank() == 0);
}

TEST_CASE("closed forms agree with the Euler-form route") {
  for (const auto& [b, graphical] : instances()) {
    CHECK(flow_qlattice(b).gram() == flow_gram_from_k0(b));
    CHECK(cut_qlattice(b).gram() == cut_gram_from_k0(b));
  }
}

TEST_CASE("change_basis") {
  const QLattice l = cut_qlattice(triangle_b());
  CHECK(change_basis(l, LaurentMatrix::identity(2)).gram() == l.gram());
  const LaurentMatrix swap{{0L, -1L}, {1L, 0L}};
  const auto c = change_basis(l, swap);
  CHECK(c.gram() == LaurentMatrix{{1 + q2, -q2}, {-q2, 1 + q2}});
  CHECK(normalized_det(c) == normalized_det(l));
  CHECK_THROWS_AS(change_basis(l, LaurentMatrix{{1L, 0L}, {0L, 2L}}), NonUnitDeterminant);
  CHECK_THROWS_AS(change_basis(l, LaurentMatrix::identity(3)), DimensionError);

  std::mt19937_64 rng(8);
  const std::vector<QLattice> small = {l, flow_qlattice(theta_b()),
                                       flow_qlattice(testing::random_bipartite(rng, 3, 3, 0.7)),
                                       QLattice(at_t(k0_gram(theta_b()), -1))};
  for (int it = 0; it < 1000; ++it) {
    const QLattice& base = small[static_cast<std::size_t>(it) % small.size()];
    const auto t = testing::random_unimodular(rng, base.rank(), 3);
    CHECK(normalized_det(change_basis(base, t)) == normalized_det(base));
  }
}

TEST_CASE("normalized_det and is_unimodular") {
  CHECK(normalized_det(flow_qlattice(triangle_b())) == 1 + 2 * q2);
  CHECK(normalized_det(cut_qlattice(triangle_b())) == 1 + 2 * q2);
  CHECK(normalized_det(QLattice(LaurentMatrix::identity(3))) == one);
  CHECK(normalized_det(QLattice(LaurentMatrix(0, 0))) == one);
  CHECK_FALSE(is_unimodular(flow_qlattice(triangle_b())));
  CHECK(is_unimodular(QLattice(LaurentMatrix(0, 0))));
  for (const auto& [b, graphical] : instances()) {
    CHECK(is_unimodular(QLattice(at_t(k0_gram(b), -1))));
    CHECK(normalized_det(QLattice(at_t(k0_gram(b), -1))) == one);
  }
}

TEST_CASE("dual_basis") {
  const QLattice id(LaurentMatrix::identity(2));
  CHECK(dual_basis(id, DualSide::right) == FractionMatrix::identity(2));
  CHECK(dual_basis(id, DualSide::left) == FractionMatrix::identity(2));
  const auto d = dual_basis(flow_qlattice(triangle_b()), DualSide::right);
  CHECK(d(0, 0) == frac_reduce(one, 1 + 2 * q2));
  const QLattice k0(at_t(k0_gram(theta_b()), -1));
  CHECK(is_laurent(dual_basis(k0, DualSide::right)));
  CHECK(is_laurent(dual_basis(k0, DualSide::left)));
  CHECK_THROWS_AS(dual_basis(QLattice(LaurentMatrix{{one, one}, {one, one}}), DualSide::right),
                  SingularMatrix);

  // Non-symmetric Gram: standard basis of K0 at t = -1.
  const auto b = SignedBipartiteGraph({1, 2}, {3, 4}, {{1, 3, 1}, {2, 3, -1}, {2, 4, 1}});
  const LaurentMatrix a = at_t(euler_gram(b, Basis::standard), -1);
  REQUIRE(a != a.transpose());
  const QLattice l(a);
  const FractionMatrix right = dual_basis(l, DualSide::right), left = dual_basis(l, DualSide::left);
  const FractionMatrix af = to_fraction(a);
  // <b_i, right_j> = e_i^t A right_j ; <left_j, b_i> = left_j^* A e_i.
  CHECK(af * right == FractionMatrix::identity(4));
  CHECK(star(left) * af == FractionMatrix::identity(4));
}

TEST_CASE("norm_shape") {
  const QLattice tri = flow_qlattice(triangle_b());
  CHECK(norm_shape(tri, {one}) == Integer(2));
  const QLattice th = flow_qlattice(theta_b());
  CHECK_FALSE(norm_shape(th, {one, one}).has_value());
  CHECK_FALSE(norm_shape(th, {LaurentPoly(), LaurentPoly()}).has_value());
  CHECK(norm_shape(th, {LaurentPoly(), -LaurentPoly::q(5)}) == Integer(1));
}

TEST_CASE("rigidity sampling") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> deg(-2, 2), coef(-3, 3);
  int lattices = 0;
  for (const auto& [b, graphical] : instances()) {
    if (!graphical || b.part1().empty()) continue;
    if (++lattices > 25) break;
    const QLattice l = flow_qlattice(b);
    for (int it = 0; it < 1000; ++it) {
      std::vector<LaurentPoly> x;
      int monomials = 0, support = 0;
      for (std::size_t k = 0; k < l.rank(); ++k) {
        LaurentPoly c;
        const int terms = coef(rng) & 1 ? 0 : 1 + (it % 2);
        for (int s = 0; s < terms; ++s) c += LaurentPoly::monomial(coef(rng), deg(rng));
        if (!c.is_zero()) {
          ++support;
          monomials += c.is_unit() ? 1 : 2;
        }
        x.push_back(c);
      }
      const bool unit_basis = support == 1 && monomials == 1;
      CHECK(norm_shape(l, x).has_value() == unit_basis);
    }
  }
  CHECK(lattices > 20);
}

TEST_CASE("decide_iso") {
  const QLattice tri = flow_qlattice(triangle_b());
  const auto self = decide_iso(tri, tri);
  REQUIRE(self.has_value());
  CHECK(self->matrix() == LaurentMatrix::identity(1));
  CHECK_FALSE(decide_iso(tri, flow_qlattice(theta_b())).has_value());
  CHECK(decide_iso(QLattice(LaurentMatrix(0, 0)), QLattice(LaurentMatrix(0, 0))).has_value());
  CHECK_THROWS_AS(decide_iso(QLattice(LaurentMatrix{{1 + q}}), tri), HypothesisError);
  CHECK_THROWS_AS(decide_iso(tri, QLattice(LaurentMatrix{{one, q2}, {-q2, one}})), HypothesisError);
  // Same diagonal, different off-diagonal pattern.
  const QLattice a(LaurentMatrix{{1 + q2, q2, 0L}, {q2, 1 + q2, q2}, {0L, q2, 1 + q2}});
  const QLattice c(LaurentMatrix{{1 + q2, q2, q2}, {q2, 1 + q2, q2}, {q2, q2, 1 + q2}});
  CHECK_FALSE(decide_iso(a, c).has_value());
  // Least witness: swap with signs.
  const QLattice s(LaurentMatrix{{1 + q2, -q2, 0L}, {-q2, 1 + q2, 0L}, {0L, 0L, 1 + 2 * q2}});
  const QLattice s2(LaurentMatrix{{1 + 2 * q2, 0L, 0L}, {0L, 1 + q2, q2}, {0L, q2, 1 + q2}});
  const auto w = decide_iso(s, s2);
  REQUIRE(w.has_value());
  CHECK(w->perm == std::vector<std::size_t>{2, 0, 1});
  CHECK(w->signs == std::vector<int>{1, 1, -1});
}

TEST_CASE("decide_iso recovers random scrambles") {
  std::mt19937_64 rng(31);
  int lattices = 0;
  for (const auto& [b, graphical] : instances()) {
    if (lattices++ % 4 != 0) continue;
    for (const QLattice& l : {flow_qlattice(b), cut_qlattice(b)}) {
      for (int it = 0; it < 100; ++it) {
        const auto p = testing::random_signed_permutation(rng, l.rank());
        const QLattice scrambled = change_basis(l, p);
        const auto w = decide_iso(l, scrambled);
        REQUIRE(w.has_value());
        CHECK(w->matrix().transpose() * l.gram() * w->matrix() == scrambled.gram());
      }
    }
  }
}

TEST_CASE("lattice invariants over the test family") {
  for (const auto& [b, graphical] : instances()) {
    const QLattice flow = flow_qlattice(b), cut = cut_qlattice(b);
    CHECK(flow.gram() == cut_qlattice(dual(b)).gram());
    CHECK(cut.gram() == flow_qlattice(dual(b)).gram());
    CHECK(normalized_det(flow) == normalized_det(cut));
    CHECK(at_q1(flow.gram()) == to_laurent(classical_gram(b, Side::flow)));
    CHECK(at_q1(cut.gram()) == to_laurent(classical_gram(b, Side::cut)));
    if (graphical) CHECK(normalized_det(cut).coeff(0) == 1);
  }
}
