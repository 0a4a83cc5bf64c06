#include "qlat/invariants.hpp"

#include <algorithm>
#include <map>

#include "qlat/algebra.hpp"
#include "qlat/errors.hpp"

namespace qlat {

std::vector<int> q_incidence_columns(const OrientedMultigraph& g, const SpanningTree& t) {
  std::vector<int> cols = t.edges();
  for (const Edge& e : g.edges())
    if (!t.contains(e.id)) cols.push_back(e.id);
  return cols;
}

LaurentMatrix q_incidence(const OrientedMultigraph& g, const SpanningTree& t) {
  const auto cols = q_incidence_columns(g, t);
  LaurentMatrix d(static_cast<std::size_t>(g.vertex_count()), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Edge& e = g.edge(cols[c]);
    if (e.is_loop()) continue;
    const LaurentPoly w = t.contains(e.id) ? LaurentPoly(1) : LaurentPoly::q();
    d(static_cast<std::size_t>(e.head - 1), c) = w;
    d(static_cast<std::size_t>(e.tail - 1), c) = -w;
  }
  std::vector<std::string> rows;
  for (int v = 1; v <= g.vertex_count(); ++v) rows.push_back("v" + std::to_string(v));
  d.set_row_labels(rows);
  d.set_col_labels(id_labels(cols));
  return d;
}

LaurentPoly matrix_tree_enum_oracle(const OrientedMultigraph& g, const SpanningTree& t) {
  LaurentPoly p;
  const auto c = tree_overlap_counts(g, t);
  for (std::size_t i = 0; i < c.size(); ++i)
    p += LaurentPoly::monomial(Integer(c[i]), 2 * static_cast<int>(i));
  return p;
}

MatrixTreeReport q_matrix_tree(const OrientedMultigraph& g, const SpanningTree& t, BridgePolicy policy) {
  const ValidationReport v = validate(g, t, policy);
  if (!v.ok()) throw GraphError("invalid graph/tree pair: " + v.violations.front());
  MatrixTreeReport r;
  r.d = q_incidence(g, t);
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i + 1 < r.d.rows(); ++i) rows.push_back(i);
  for (std::size_t j = 0; j < r.d.cols(); ++j) cols.push_back(j);
  r.d0 = r.d.select(rows, cols);
  r.q0 = r.d0 * r.d0.transpose();
  r.det_q0 = normalize_unit(det(r.q0)).normalized;
  r.enum_poly = matrix_tree_enum_oracle(g, t);
  r.cut_det = normalized_det(cut_qlattice(build_bipartite(g, t, policy)));
  r.det_matches_enum = r.det_q0 == r.enum_poly;
  r.det_matches_cut = r.det_q0 == r.cut_det;
  return r;
}

LaurentMatrix cut_basis_change(const OrientedMultigraph& g, const SpanningTree& t) {
  const auto r = static_cast<std::size_t>(g.vertex_count() - 1);
  LaurentMatrix m(r, r);
  const auto last = static_cast<std::size_t>(g.vertex_count());
  for (std::size_t c = 0; c < t.edges().size(); ++c) {
    const int e = t.edges()[c];
    // Tail side of the cut: vertices reachable from the tail without e.
    std::vector<bool> side0(last + 1, false);
    side0[g.edge(e).tail] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (int id : t.edges()) {
        if (id == e) continue;
        const Edge& x = g.edge(id);
        if (side0[x.tail] != side0[x.head]) {
          side0[x.tail] = side0[x.head] = true;
          grew = true;
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (side0[i + 1] && !side0[last]) m(i, c) = LaurentPoly(1);
      if (!side0[i + 1] && side0[last]) m(i, c) = LaurentPoly(-1);
    }
  }
  return m;
}

GlueReport verify_glue(const SignedBipartiteGraph& b) {
  GlueReport r;
  const QTMatrix g = k0_gram(b);
  r.orthogonal = true;
  for (int j : b.part0()) {
    const auto gl = g * simple_in_projectives(b, j).coords;
    for (int i : b.part1())
      if (!gl[b.index(i)].is_zero()) r.orthogonal = false;
  }
  r.flow_det = normalized_det(flow_qlattice(b));
  r.cut_det = normalized_det(cut_qlattice(b));
  r.det_equal = r.flow_det == r.cut_det;
  const QTElement d = det(g);
  r.unimodular = normalize_unit(at_t(d, 1)).normalized == LaurentPoly(1) &&
                 normalize_unit(at_t(d, -1)).normalized == LaurentPoly(1);
  return r;
}

bool is_cycle_preserving(const OrientedMultigraph& g1, const OrientedMultigraph& g2,
                         const std::vector<int>& f) {
  for (EdgeMask c : cycle_space_gf2(g1)) {
    std::vector<int> degree(static_cast<std::size_t>(g2.vertex_count()) + 1, 0);
    for (int k = 0; k < g1.edge_count(); ++k) {
      if (!(c >> k & 1)) continue;
      const Edge& e = g2.edge(f[static_cast<std::size_t>(k)]);
      if (e.is_loop()) continue;
      ++degree[e.tail];
      ++degree[e.head];
    }
    for (int d : degree)
      if (d % 2) return false;
  }
  return true;
}

namespace {

struct TwoIsoSearch {
  int m;
  const SpanningTree& t1;
  const SpanningTree& t2;
  // in_cycle[k][f] : edge k+1 lies on the fundamental cycle of f+1
  std::vector<std::vector<bool>> in1, in2;
  std::vector<int> count1, count2;
  std::vector<int> image;
  std::vector<bool> used;

  // Membership of an edge in a fundamental cycle must be preserved.
  bool consistent(int e, int fe) const {
    for (int x = 0; x < e; ++x) {
      const int fx = image[static_cast<std::size_t>(x)];
      if (!t1.contains(x + 1) && in1[e][x] != in2[fe][fx]) return false;
      if (!t1.contains(e + 1) && in1[x][e] != in2[fx][fe]) return false;
    }
    return true;
  }

  bool extend(int e) {
    if (e == m) return true;
    const bool tree = t1.contains(e + 1);
    for (int fe = 0; fe < m; ++fe) {
      if (used[fe] || t2.contains(fe + 1) != tree || count1[e] != count2[fe]) continue;
      if (!consistent(e, fe)) continue;
      image[static_cast<std::size_t>(e)] = fe;
      used[fe] = true;
      if (extend(e + 1)) return true;
      used[fe] = false;
    }
    return false;
  }
};

void fundamental_membership(const OrientedMultigraph& g, const SpanningTree& t,
                            std::vector<std::vector<bool>>& in, std::vector<int>& count) {
  const int m = g.edge_count();
  in.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  count.assign(static_cast<std::size_t>(m), 0);
  for (const Edge& f : g.edges()) {
    if (t.contains(f.id)) continue;
    const auto c = fundamental_cycle(g, t, f.id);
    for (int k = 0; k < m; ++k)
      if (c[static_cast<std::size_t>(k)] != 0) {
        in[k][f.id - 1] = true;
        ++count[k];
      }
  }
}

}  // namespace

std::optional<std::vector<int>> two_iso_search(const OrientedMultigraph& g1, const SpanningTree& t1,
                                               const OrientedMultigraph& g2, const SpanningTree& t2) {
  if (g1.edge_count() != g2.edge_count() || t1.size() != t2.size()) return std::nullopt;
  if (!is_spanning_tree(g1, t1) || !is_spanning_tree(g2, t2))
    throw GraphError("two_iso_search: invalid spanning tree");
  const int m = g1.edge_count();
  TwoIsoSearch s{m, t1, t2, {}, {}, {}, {}, std::vector<int>(static_cast<std::size_t>(m)),
                 std::vector<bool>(static_cast<std::size_t>(m))};
  fundamental_membership(g1, t1, s.in1, s.count1);
  fundamental_membership(g2, t2, s.in2, s.count2);
  if (!s.extend(0)) return std::nullopt;
  std::vector<int> f;
  for (int x : s.image) f.push_back(x + 1);
  if (!is_cycle_preserving(g1, g2, f)) throw Error("two_iso_search: witness fails the cycle-space check");
  return f;
}

Q2IsoReport verify_q2iso_pair(const OrientedMultigraph& g1, const SpanningTree& t1,
                              const OrientedMultigraph& g2, const SpanningTree& t2) {
  for (const OrientedMultigraph* g : {&g1, &g2}) {
    for (const Edge& e : g->edges())
      if (e.is_loop()) throw HypothesisError("q-2-isomorphism check needs loopless graphs");
    if (!find_bridges(*g).empty()) throw HypothesisError("q-2-isomorphism check needs bridgeless graphs");
  }
  const auto b1 = build_bipartite(g1, t1), b2 = build_bipartite(g2, t2);
  Q2IsoReport r;
  r.flow_witness = decide_iso(flow_qlattice(b1), flow_qlattice(b2));
  r.cut_witness = decide_iso(cut_qlattice(b1), cut_qlattice(b2));
  r.edge_witness = two_iso_search(g1, t1, g2, t2);
  r.flow_iso = r.flow_witness.has_value();
  r.cut_iso = r.cut_witness.has_value();
  r.two_iso = r.edge_witness.has_value();
  return r;
}

std::optional<std::pair<SignedBipartiteGraph, SignedBipartiteGraph>> find_flow_cut_discrepancy(
    int max_part) {
  for (int total = 2; total <= 2 * max_part; ++total)
    for (int n0 = std::max(1, total - max_part); n0 <= std::min(max_part, total - 1); ++n0) {
      const int n1 = total - n0, cells = n0 * n1;
      std::vector<int> p0, p1;
      for (int i = 1; i <= n0; ++i) p0.push_back(i);
      for (int j = n0 + 1; j <= total; ++j) p1.push_back(j);
      // Classes of flow-isomorphic graphs, keyed by a cheap invariant.
      struct Member {
        SignedBipartiteGraph b;
        QLattice flow, cut;
      };
      std::map<std::pair<std::vector<Integer>, std::vector<Integer>>, std::vector<Member>> reps;
      long limit = 1;
      for (int c = 0; c < cells; ++c) limit *= 3;
      for (long code = 0; code < limit; ++code) {
        std::vector<SignedEdge> edges;
        std::vector<int> deg(static_cast<std::size_t>(total) + 1, 0);
        long x = code;
        for (int c = 0; c < cells; ++c, x /= 3) {
          const int s = static_cast<int>(x % 3) - 1;
          if (s == 0) continue;
          const int i = p0[static_cast<std::size_t>(c / n1)], j = p1[static_cast<std::size_t>(c % n1)];
          edges.push_back({i, j, s});
          ++deg[i];
          ++deg[j];
        }
        if (std::count(deg.begin() + 1, deg.end(), 0) > 0) continue;
        // Switching at E1 vertices does not change either isomorphism class,
        // so keep only sign patterns whose columns start with +1.
        bool normal = true;
        for (int j : p1) {
          for (const SignedEdge& e : edges)
            if (e.j == j) {
              normal = normal && e.sign > 0;
              break;
            }
        }
        if (!normal) continue;
        SignedBipartiteGraph b(p0, p1, edges);
        QLattice flow = flow_qlattice(b), cut = cut_qlattice(b);
        std::vector<Integer> diag;
        for (std::size_t k = 0; k < flow.rank(); ++k) diag.push_back(flow.gram()(k, k).coeff(2));
        std::sort(diag.begin(), diag.end());
        const auto key = std::make_pair(diag, normalized_det(flow).coeffs());
        auto& bucket = reps[key];
        bool placed = false;
        for (const Member& rep : bucket) {
          if (!decide_iso(rep.flow, flow)) continue;
          placed = true;
          if (!decide_iso(rep.cut, cut)) return std::make_pair(rep.b, b);
          break;
        }
        if (!placed) bucket.push_back({std::move(b), std::move(flow), std::move(cut)});
      }
    }
  return std::nullopt;
}

namespace {

LaurentMatrix at_q1(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& p) { return LaurentPoly(evaluate_at_sign(p, 1)); });
}

}  // namespace

std::vector<CheckResult> verify_bipartite(const SignedBipartiteGraph& b) {
  std::vector<CheckResult> out;
  auto check = [&out](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  const std::size_t n = b.size();
  const QTMatrix g = k0_gram(b);
  check("k0 Gram is symmetric", g == g.transpose());
  check("k0 Gram has determinant 1", det(g) == QTElement(1));
  const QTMatrix inv = inverse_unit(g);
  bool res = true;
  for (int v : b.vertices()) res = res && simple_in_projectives(b, v).coords == inv.column(b.index(v));
  check("resolution classes equal inverse Gram columns", res);
  const QTMatrix d = d_matrix(b);
  check("d squares to the identity", d * qlat::bar(d) == QTMatrix::identity(n));
  const auto classes = distinguished_classes(b);
  bool fixes = true, sym = true;
  for (std::size_t k = 0; k < n; ++k) {
    fixes = fixes && apply_d(b, classes.simple[k]) == classes.simple[k];
    for (std::size_t l = 0; l < n; ++l) {
      K0Vector x = classes.projective[k], y = classes.simple[l];
      for (std::size_t c = 0; c < n; ++c) x.coords[c] += QTElement::monomial(1, 0) * y.coords[c];
      sym = sym && euler_form(b, x, y) == euler_form(b, apply_d(b, y), apply_d(b, x));
    }
  }
  check("d fixes simple classes", fixes);
  check("<x,y> = <d y, d x>", sym);
  bool dual_pairs = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      dual_pairs = dual_pairs && euler_form(b, classes.standard[k], classes.costandard[l]) == QTElement(k == l ? 1 : 0);
  check("costandard classes are right dual to standard classes", dual_pairs);
  const QTMatrix sg = euler_gram(b, Basis::standard);
  const auto ids = b.vertices();
  bool pattern = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      QTElement expected(r == c ? 1 : 0);
      if (!b.in_part0(ids[r]) && b.in_part0(ids[c])) {
        const int s = b.sign(ids[c], ids[r]);
        if (s != 0)
          expected = QTElement::monomial(1, s < 0) - QTElement::monomial(-1, s < 0);
      }
      pattern = pattern && sg(r, c) == expected;
    }
  check("standard-basis Gram pattern", pattern);
  const SignedBipartiteGraph bd = dual(b);
  const QTMatrix lhs = euler_gram(b, Basis::simple);
  std::vector<K0Vector> images;
  for (std::size_t k = 0; k < n; ++k) {
    K0Vector e{std::vector<QTElement>(n, QTElement(0)), Basis::simple};
    e.coords[k] = QTElement(1);
    images.push_back(koszul_transport(b, e));
  }
  bool koszul = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      koszul = koszul && lhs(r, c) == koszul_substitute(euler_form(bd, images[r], images[c]));
  check("Koszul transport preserves the Euler form", koszul);
  const QLattice flow = flow_qlattice(b), cut = cut_qlattice(b);
  check("flow Gram equals cut Gram of the dual", flow.gram() == cut_qlattice(bd).gram());
  check("cut Gram equals flow Gram of the dual", cut.gram() == flow_qlattice(bd).gram());
  check("flow closed form matches the Euler form", flow.gram() == flow_gram_from_k0(b));
  check("cut closed form matches the Euler form", cut.gram() == cut_gram_from_k0(b));
  check("flow Gram at q=1 is classical", at_q1(flow.gram()) == to_laurent(classical_gram(b, Side::flow)));
  check("cut Gram at q=1 is classical", at_q1(cut.gram()) == to_laurent(classical_gram(b, Side::cut)));
  const GlueReport glue = verify_glue(b);
  check("projectives of E1 are orthogonal to simples of E0", glue.orthogonal);
  check("flow and cut determinants agree", glue.det_equal);
  check("K0 is unimodular", glue.unimodular);
  check("flow lattice is isomorphic to itself", decide_iso(flow, flow).has_value());
  return out;
}

std::vector<CheckResult> verify_graph(const OrientedMultigraph& g, const SpanningTree& t) {
  std::vector<CheckResult> out;
  auto check = [&out](std::string name, bool pass) { out.push_back({std::move(name), pass}); };
  const ValidationReport v = validate(g, t);
  check("graph and tree are valid", v.ok());
  if (!v.ok()) return out;
  const int m = g.edge_count();
  bool duality = true, orth = true;
  std::vector<SignedEdgeVector> cycles, cuts;
  for (const Edge& e : g.edges())
    (t.contains(e.id) ? cuts : cycles).push_back(t.contains(e.id) ? fundamental_cut(g, t, e.id)
                                                                   : fundamental_cycle(g, t, e.id));
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      int s = 0;
      for (int k = 0; k < m; ++k) s += cuts[a][k] * cycles[c][k];
      orth = orth && s == 0;
    }
  for (int i : t.edges())
    for (const Edge& j : g.edges())
      if (!t.contains(j.id))
        duality = duality && fundamental_cycle(g, t, j.id)[i - 1] == -fundamental_cut(g, t, i)[j.id - 1];
  check("cycle and cut signs are opposite", duality);
  check("fundamental cuts are orthogonal to fundamental cycles", orth);
  const auto trees = enumerate_spanning_trees(g);
  const auto counts = tree_overlap_counts(g, t);
  long total = 0;
  for (long c : counts) total += c;
  check("overlap counts sum to the tree count", counts[0] == 1 && total == static_cast<long>(trees.size()));
  const MatrixTreeReport mt = q_matrix_tree(g, t);
  check("det Q0 equals the enumeration polynomial", mt.det_matches_enum);
  check("det Q0 equals the cut determinant", mt.det_matches_cut);
  const LaurentMatrix tb = cut_basis_change(g, t);
  const SignedBipartiteGraph b = build_bipartite(g, t);
  check("cut basis change carries Q0 to the cut Gram",
        tb.transpose() * mt.q0 * tb == cut_qlattice(b).gram());
  // Every principal cofactor of Q = D D^t agrees.
  const LaurentMatrix q = mt.d * mt.d.transpose();
  bool cof = true;
  const auto nv = static_cast<std::size_t>(g.vertex_count());
  for (std::size_t drop = 0; drop < nv; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < nv; ++k)
      if (k != drop) keep.push_back(k);
    cof = cof && det(q.select(keep, keep)) == det(mt.q0);
  }
  check("all principal cofactors of Q agree", cof);
  // det D0_J is +-q^|J\T| for spanning trees J and 0 otherwise.
  const auto cols = q_incidence_columns(g, t);
  bool minors = true;
  const std::size_t r = t.size();
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < r; ++k) rows.push_back(k);
  std::vector<bool> pick(cols.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
  do {
    std::vector<std::size_t> sel;
    std::vector<int> ids;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (pick[k]) {
        sel.push_back(k);
        ids.push_back(cols[k]);
      }
    const LaurentPoly dj = det(mt.d0.select(rows, sel));
    const SpanningTree j(ids);
    if (is_spanning_tree(g, j)) {
      int outside = 0;
      for (int id : ids) outside += t.contains(id) ? 0 : 1;
      minors = minors && dj.is_unit() && dj.min_deg() == outside;
    } else {
      minors = minors && dj.is_zero();
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  check("maximal minors of D0 match spanning trees", minors);
  bool vectors = true;
  const auto bids = b.vertices();
  for (int j : b.part1()) {
    const auto bc = b_cycle(b, j);
    const auto fc = fundamental_cycle(g, t, j);
    for (std::size_t k = 0; k < bids.size(); ++k) vectors = vectors && bc[k] == fc[bids[k] - 1];
  }
  for (int i : b.part0()) {
    const auto bc = b_cut(b, i);
    const auto fc = fundamental_cut(g, t, i);
    for (std::size_t k = 0; k < bids.size(); ++k) vectors = vectors && bc[k] == fc[bids[k] - 1];
  }
  check("bipartite cycles and cuts match the graph", vectors);
  const auto self = two_iso_search(g, t, g, t);
  std::vector<int> identity;
  for (int k = 1; k <= m; ++k) identity.push_back(k);
  check("2-isomorphism search finds the identity", self && *self == identity);
  check("cut determinant has constant term 1", mt.cut_det.coeff(0) == 1);
  for (auto& c : verify_bipartite(b)) out.push_back(std::move(c));
  return out;
}

}  // namespace qlat
