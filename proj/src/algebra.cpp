#include "qlat/algebra.hpp"

#include "qlat/errors.hpp"

namespace qlat {
namespace {

int negativity(int sign) { return sign < 0 ? 1 : 0; }

// Sign of the edge between u and v, in either order.
int edge_sign(const SignedBipartiteGraph& b, int u, int v) {
  return b.in_part0(u) ? b.sign(u, v) : b.sign(v, u);
}

std::vector<QTElement> unit_vector(std::size_t n, std::size_t k) {
  std::vector<QTElement> v(n, QTElement(0));
  v[k] = QTElement(1);
  return v;
}

void require_size(const SignedBipartiteGraph& b, const K0Vector& x) {
  if (x.coords.size() != b.size()) throw DimensionError("K0 vector length does not match the graph");
}

}  // namespace

std::vector<PathBasisElement> path_basis(const SignedBipartiteGraph& b) {
  std::vector<PathBasisElement> out;
  for (int v : b.vertices()) out.push_back({v, v, std::nullopt, 0, 0});
  for (const SignedEdge& e : b.edges()) {
    out.push_back({e.i, e.j, std::nullopt, 1, negativity(e.sign)});
    out.push_back({e.j, e.i, std::nullopt, 1, negativity(e.sign)});
  }
  for (int j : b.part1())
    for (int k : b.neighbors(j))
      for (int j2 : b.neighbors(k))
        out.push_back({j, j2, k, 2, (negativity(b.sign(k, j)) + negativity(b.sign(k, j2))) % 2});
  return out;
}

QTElement hom_qtdim(const SignedBipartiteGraph& b, int i, int j) {
  if (!b.has_vertex(i) || !b.has_vertex(j)) throw GraphError("hom_qtdim: unknown vertex");
  QTElement s(0);
  for (const auto& p : path_basis(b))
    if (p.source == i && p.target == j) s += QTElement::monomial(p.q_degree, p.t_degree);
  return s;
}

QTMatrix k0_gram(const SignedBipartiteGraph& b) {
  const std::size_t n = b.size();
  QTMatrix g(n, n, QTElement(0));
  for (const auto& p : path_basis(b))
    g(b.index(p.source), b.index(p.target)) += QTElement::monomial(p.q_degree, p.t_degree);
  g.set_labels(id_labels(b.vertices()));
  return g;
}

Resolution resolve_simple(const SignedBipartiteGraph& b, int i) {
  Resolution r{i, {{{i, 0, 0}}}};
  std::vector<ResolutionTerm> first;
  for (int j : b.neighbors(i)) first.push_back({j, 1, negativity(edge_sign(b, i, j))});
  if (!first.empty()) r.terms.push_back(first);
  if (b.in_part0(i)) {
    std::vector<ResolutionTerm> second;
    for (const ResolutionTerm& mid : first)
      for (int k : b.neighbors(mid.vertex))
        second.push_back({k, 2, (mid.t_shift + negativity(b.sign(k, mid.vertex))) % 2});
    if (!second.empty()) r.terms.push_back(second);
  }
  return r;
}

K0Vector projective_class(const SignedBipartiteGraph& b, int i) {
  return {unit_vector(b.size(), b.index(i)), Basis::projective};
}

K0Vector simple_in_projectives(const SignedBipartiteGraph& b, int i) {
  K0Vector x{std::vector<QTElement>(b.size(), QTElement(0)), Basis::projective};
  const Resolution r = resolve_simple(b, i);
  for (std::size_t d = 0; d < r.terms.size(); ++d) {
    const QTElement sign(d % 2 == 0 ? 1 : -1);
    for (const ResolutionTerm& term : r.terms[d])
      x.coords[b.index(term.vertex)] += sign * QTElement::monomial(term.q_shift, term.t_shift);
  }
  return x;
}

QTMatrix basis_matrix(const SignedBipartiteGraph& b, Basis basis) {
  const std::size_t n = b.size();
  if (basis == Basis::projective) return QTMatrix::identity(n);
  const QTMatrix g = k0_gram(b);
  const QTMatrix simple = inverse_unit(g);
  if (basis == Basis::simple) return simple;
  const QTMatrix injective = simple * qlat::bar(g);
  if (basis == Basis::injective) return injective;
  QTMatrix m(n, n);
  const std::size_t n0 = b.part0().size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= n0)
      m.set_column(k, simple.column(k));
    else if (basis == Basis::standard)
      m.set_column(k, unit_vector(n, k));
    else
      m.set_column(k, injective.column(k));
  }
  return m;
}

K0Vector to_projective(const SignedBipartiteGraph& b, const K0Vector& x) {
  require_size(b, x);
  if (x.basis == Basis::projective) return x;
  return {basis_matrix(b, x.basis) * x.coords, Basis::projective};
}

QTElement euler_form(const SignedBipartiteGraph& b, const K0Vector& x, const K0Vector& y) {
  const auto xp = to_projective(b, x).coords, yp = to_projective(b, y).coords;
  const auto gy = k0_gram(b) * yp;
  QTElement s(0);
  for (std::size_t k = 0; k < xp.size(); ++k) s += bar(xp[k]) * gy[k];
  return s;
}

QTMatrix euler_gram(const SignedBipartiteGraph& b, Basis basis) {
  const QTMatrix x = basis_matrix(b, basis);
  QTMatrix out = star(x) * k0_gram(b) * x;
  out.set_labels(id_labels(b.vertices()));
  return out;
}

DistinguishedClasses distinguished_classes(const SignedBipartiteGraph& b) {
  DistinguishedClasses out;
  const std::size_t n = b.size();
  auto columns = [&](Basis basis) {
    const QTMatrix m = basis_matrix(b, basis);
    std::vector<K0Vector> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back({m.column(k), Basis::projective});
    return v;
  };
  out.projective = columns(Basis::projective);
  out.simple = columns(Basis::simple);
  out.injective = columns(Basis::injective);
  out.standard = columns(Basis::standard);
  out.costandard = columns(Basis::costandard);
  return out;
}

QTMatrix d_matrix(const SignedBipartiteGraph& b) {
  const QTMatrix g = k0_gram(b);
  return inverse_unit(g) * qlat::bar(g);
}

K0Vector apply_d(const SignedBipartiteGraph& b, const K0Vector& x) {
  const K0Vector p = to_projective(b, x);
  std::vector<QTElement> conj;
  for (const auto& c : p.coords) conj.push_back(bar(c));
  return {d_matrix(b) * conj, Basis::projective};
}

K0Vector koszul_transport(const SignedBipartiteGraph& b, const K0Vector& x) {
  require_size(b, x);
  if (x.basis != Basis::simple) throw Error("koszul_transport expects simple-basis coordinates");
  const SignedBipartiteGraph d = dual(b);
  K0Vector out{std::vector<QTElement>(b.size(), QTElement(0)), Basis::projective};
  const std::vector<int> ids = b.vertices();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    QTElement c = koszul_substitute(x.coords[k]);
    if (b.in_part0(ids[k])) c = c * QTElement::t();
    out.coords[d.index(ids[k])] = c;
  }
  return out;
}

}  // namespace qlat
