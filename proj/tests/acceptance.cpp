// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qlat/algebra.hpp"
#include "qlat/family.hpp"
#include "qlat/invariants.hpp"
#include "qlat/qlattice.hpp"
#include "support.hpp"

using namespace qlat;

namespace {

// Every comparison below is exact equality in Z[q,q^-1] or Z[q,q^-1,t]/(t^2-1);
// the only tolerances are wall-clock limits.
constexpr double kLimitC1 = 1.0;
constexpr double kLimitC2 = 60.0;
constexpr double kLimitC7 = 300.0;
constexpr double kNoLimit = 0.0;

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly q2 = LaurentPoly::q(2);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) o.require(false, "runtime " + std::to_string(secs) + " s over limit");
  if (!o.pass) ++failures;
  std::printf("%s %d %s (%.3f s", o.pass ? "PASS" : "FAIL", id, title, secs);
  if (limit > 0) std::printf(", limit %.0f s", limit);
  std::printf(")%s%s\n", o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

struct GraphInstance {
  OrientedMultigraph g;
  SpanningTree t;
};

std::vector<GraphInstance> family(int max_edges, bool loops = true) {
  std::vector<GraphInstance> out;
  for (const auto& g : bridgeless_family(max_edges, loops))
    for (const auto& t : enumerate_spanning_trees(g)) out.push_back({g, t});
  return out;
}

OrientedMultigraph triangle() { return OrientedMultigraph(3, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}}); }
OrientedMultigraph k4() {
  return OrientedMultigraph(4, {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}, {4, 2, 3}, {5, 2, 4}, {6, 3, 4}});
}

LaurentMatrix at_q1_tm1(const QTMatrix& m) { return at_t(specialize(m, Spec::plus_one, Spec::keep), -1); }

QTElement qt(const LaurentPoly& p) { return QTElement(p); }

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t k = from; k < to; ++k) r.push_back(k);
  return r;
}

K0Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  K0Vector v{{}, Basis::projective};
  for (std::size_t k = 0; k < n; ++k) v.coords.push_back(testing::random_qt(rng));
  return v;
}

Outcome c1() {
  Outcome o;
  const SignedBipartiteGraph b({1, 2}, {3}, {{1, 3, 1}, {2, 3, 1}});
  const QTMatrix g = k0_gram(b);
  const QTMatrix want_g{{1L, 0L, qt(q)}, {0L, 1L, qt(q)}, {qt(q), qt(q), qt(1 + 2 * q2)}};
  o.require(g == want_g, "projective Gram");
  const std::vector<std::vector<LaurentPoly>> listed = {
      {1 + q2, q2, -q}, {q2, 1 + q2, -q}, {-q, -q, LaurentPoly(1)}};
  for (int i = 1; i <= 3; ++i) {
    std::vector<QTElement> want;
    for (const auto& c : listed[i - 1]) want.push_back(qt(c));
    o.require(simple_in_projectives(b, i).coords == want, "simple class L" + std::to_string(i));
  }
  const K0Vector l1 = simple_in_projectives(b, 1), l3 = simple_in_projectives(b, 3), p1 = projective_class(b, 1);
  o.require(euler_form(b, l1, p1) == qt(LaurentPoly::q(-2)), "<L1,P1> = q^-2");
  o.require(euler_form(b, l3, p1) == qt(q - LaurentPoly::q(-1)), "<L3,P1> = q - q^-1");
  const QTElement w = qt(q - LaurentPoly::q(-1));
  const QTMatrix want_v{{1L, 0L, 0L}, {0L, 1L, 0L}, {w, w, 1L}};
  o.require(euler_gram(b, Basis::standard) == want_v, "standard-basis Gram");
  // Left duality of projectives and simples.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      o.require(euler_form(b, projective_class(b, i), simple_in_projectives(b, j)) == QTElement(i == j ? 1 : 0),
                "<P_i, L_j> = delta");
  return o;
}

Outcome c2() {
  Outcome o;
  long n5 = 0, n6 = 0;
  for (const auto& [g, t] : family(5)) {
    ++n5;
    const auto r = q_matrix_tree(g, t);
    o.require(r.det_matches_enum && r.det_matches_cut, "three-way agreement (<=5 edges)");
  }
  for (const auto& [g, t] : family(6)) {
    ++n6;
    o.require(q_matrix_tree(g, t).ok(), "three-way agreement (<=6 edges)");
  }
  o.require(n5 == 136, "<=5 family has 136 instances");
  o.require(q_matrix_tree(k4(), SpanningTree({1, 2, 3})).det_q0 == 1 + 6 * q2 + 9 * LaurentPoly::q(4), "K4 star");
  o.require(q_matrix_tree(triangle(), SpanningTree({1, 2})).det_q0 == 1 + 2 * q2, "triangle");
  if (o.pass) o.detail = std::to_string(n5) + " instances (<=5 edges), " + std::to_string(n6) + " (<=6 edges)";
  return o;
}

Outcome c3() {
  Outcome o;
  long count = 0;
  for (const auto& [g, t] : family(5)) {
    ++count;
    o.require(verify_glue(build_bipartite(g, t)).det_equal, "family instance");
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 4);
  for (int it = 0; it < 200; ++it) {
    ++count;
    const auto b = testing::random_bipartite(rng, size(rng), size(rng));
    o.require(normalized_det(flow_qlattice(b)) == normalized_det(cut_qlattice(b)), "random signed graph");
  }
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome c4() {
  Outcome o;
  long count = 0;
  for (const auto& [g, t] : family(5)) {
    ++count;
    const auto b = build_bipartite(g, t);
    const auto e0 = range(0, b.part0().size()), e1 = range(b.part0().size(), b.size());
    o.require(at_q1_tm1(k0_gram(b)).select(e1, e1) == to_laurent(classical_gram(b, Side::flow)),
              "projective pairings give the flow Gram");
    o.require(at_q1_tm1(euler_gram(b, Basis::simple)).select(e0, e0) == to_laurent(classical_gram(b, Side::cut)),
              "simple pairings give the cut Gram");
  }
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome c5() {
  Outcome o;
  std::vector<SignedBipartiteGraph> graphs;
  for (const auto& [g, t] : family(5)) graphs.push_back(build_bipartite(g, t));
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> size(1, 4);
  for (int it = 0; it < 100; ++it) graphs.push_back(testing::random_bipartite(rng, size(rng), size(rng)));
  for (const auto& b : graphs) {
    const QTMatrix g = k0_gram(b);
    o.require(det(g) == QTElement(1), "det of the K0 Gram");
    const QTMatrix inv = inverse_unit(g);
    for (int v : b.vertices())
      o.require(simple_in_projectives(b, v).coords == inv.column(b.index(v)), "resolution class vs inverse column");
    const QTMatrix d = d_matrix(b);
    o.require(d * qlat::bar(d) == QTMatrix::identity(b.size()), "d squares to the identity");
  }
  for (int it = 0; it < 1000; ++it) {
    const auto& b = graphs[static_cast<std::size_t>(it) % graphs.size()];
    const K0Vector x = random_vector(rng, b.size()), y = random_vector(rng, b.size());
    o.require(apply_d(b, apply_d(b, x)) == x, "d(d(x)) = x");
    o.require(euler_form(b, x, y) == euler_form(b, apply_d(b, y), apply_d(b, x)), "<x,y> = <d y, d x>");
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs, 1000 random pairs";
  return o;
}

Outcome c6() {
  Outcome o;
  std::mt19937_64 rng(66);
  const auto shapes = testing::all_bipartite_shapes(rng, 6);
  for (const auto& b : shapes) {
    const std::size_t n = b.size();
    const QTMatrix lhs = euler_gram(b, Basis::simple);
    const auto bd = dual(b);
    std::vector<K0Vector> images;
    for (std::size_t k = 0; k < n; ++k) {
      K0Vector e{std::vector<QTElement>(n, QTElement(0)), Basis::simple};
      e.coords[k] = QTElement(1);
      images.push_back(koszul_transport(b, e));
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        o.require(lhs(r, c) == koszul_substitute(euler_form(bd, images[r], images[c])), "Gram entry");
  }
  o.require(shapes.size() >= 500, "at least 500 instances");
  if (o.pass) o.detail = std::to_string(shapes.size()) + " instances";
  return o;
}

Outcome c7() {
  Outcome o;
  std::mt19937_64 rng(77);
  long scrambles = 0;
  for (const auto& [g, t] : family(5)) {
    const auto b = build_bipartite(g, t);
    for (const QLattice& l : {flow_qlattice(b), cut_qlattice(b)})
      for (int it = 0; it < 100; ++it, ++scrambles) {
        const auto p = testing::random_signed_permutation(rng, l.rank());
        const QLattice s = change_basis(l, p);
        const auto w = decide_iso(l, s);
        o.require(w && w->matrix().transpose() * l.gram() * w->matrix() == s.gram(), "scramble recovered");
      }
  }
  const auto inst = family(5, false);
  long pairs = 0, positive = 0;
  bool sensitivity = false;
  for (const auto& [g1, t1] : inst)
    for (const auto& [g2, t2] : inst) {
      ++pairs;
      const auto r = verify_q2iso_pair(g1, t1, g2, t2);
      o.require(r.agree(), "three-way agreement");
      positive += r.two_iso;
      if (g1 == g2 && !r.flow_iso && !r.two_iso && !r.cut_iso) sensitivity = true;
    }
  o.require(sensitivity, "equal graphs with inequivalent trees");
  if (o.pass)
    o.detail = std::to_string(scrambles) + " scrambles, " + std::to_string(pairs) + " pairs (" +
               std::to_string(positive) + " isomorphic)";
  return o;
}

Outcome c8() {
  Outcome o;
  std::vector<SignedBipartiteGraph> graphs;
  for (const auto& [g, t] : family(5)) graphs.push_back(build_bipartite(g, t));
  std::mt19937_64 rng(88);
  for (const auto& b : testing::all_bipartite_shapes(rng, 6)) graphs.push_back(b);
  std::uniform_int_distribution<int> size(1, 4);
  for (int it = 0; it < 200; ++it) graphs.push_back(testing::random_bipartite(rng, size(rng), size(rng)));
  for (const auto& b : graphs) {
    o.require(flow_qlattice(b).gram() == cut_qlattice(dual(b)).gram(), "flow(b) = cut(dual b)");
    o.require(dual(dual(b)) == b, "dual is an involution");
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs";
  return o;
}

}  // namespace

int main() {
  criterion(1, "worked example: Gram, simple classes, pairings, standard Gram", kLimitC1, c1);
  criterion(2, "q-Matrix-Tree: det Q0 = enumeration = cut determinant", kLimitC2, c2);
  criterion(3, "gluing: flow determinant = cut determinant", kNoLimit, c3);
  criterion(4, "classical specialization at q=1, t=-1", kNoLimit, c4);
  criterion(5, "unimodularity, resolutions, involution d", kNoLimit, c5);
  criterion(6, "Koszul transport preserves the Euler form", kNoLimit, c6);
  criterion(7, "rigidity scrambles and q-2-isomorphism agreement", kLimitC7, c7);
  criterion(8, "flow Gram of b = cut Gram of dual(b)", kNoLimit, c8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
