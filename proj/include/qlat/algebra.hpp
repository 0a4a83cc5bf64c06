#pragma once

#include <optional>
#include <vector>

#include "qlat/bipartite.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

struct PathBasisElement {
  int source;
  int target;
  std::optional<int> midpoint;  // length-2 paths only
  int q_degree;                 // path length: 0, 1 or 2
  int t_degree;                 // negative edges traversed, mod 2

  friend bool operator==(const PathBasisElement&, const PathBasisElement&) = default;
};

// Graded basis of A(B): idempotents, both arrows per edge, then the surviving
// length-2 paths j -> k -> j' with j, j' in E1 and k in E0.
std::vector<PathBasisElement> path_basis(const SignedBipartiteGraph& b);

// Sum over basis paths i -> j of q^len t^parity.
QTElement hom_qtdim(const SignedBipartiteGraph& b, int i, int j);

// Gram matrix of the Euler form in the projective basis (order b.vertices()).
QTMatrix k0_gram(const SignedBipartiteGraph& b);

struct ResolutionTerm {
  int vertex;
  int q_shift;
  int t_shift;
  friend bool operator==(const ResolutionTerm&, const ResolutionTerm&) = default;
};

// terms[d] lists the summands P_vertex{q_shift}<t_shift> in homological degree
// d, with multiplicity; terms[0] is the single cover P_i.
struct Resolution {
  int vertex;
  std::vector<std::vector<ResolutionTerm>> terms;
};

Resolution resolve_simple(const SignedBipartiteGraph& b, int i);

enum class Basis { projective, simple, injective, standard, costandard };

// Coordinates with respect to the family named by `basis`, in b.vertices() order.
struct K0Vector {
  std::vector<QTElement> coords;
  Basis basis = Basis::projective;

  friend bool operator==(const K0Vector&, const K0Vector&) = default;
};

K0Vector projective_class(const SignedBipartiteGraph& b, int i);
// Alternating sum over resolve_simple(b, i).
K0Vector simple_in_projectives(const SignedBipartiteGraph& b, int i);

// Matrix whose columns are the given family in projective coordinates.
QTMatrix basis_matrix(const SignedBipartiteGraph& b, Basis basis);
K0Vector to_projective(const SignedBipartiteGraph& b, const K0Vector& x);

// <x, y> = x* G y after converting both to projective coordinates.
QTElement euler_form(const SignedBipartiteGraph& b, const K0Vector& x, const K0Vector& y);
// Gram matrix of a whole family: X* G X.
QTMatrix euler_gram(const SignedBipartiteGraph& b, Basis basis);

struct DistinguishedClasses {
  std::vector<K0Vector> projective, simple, injective, standard, costandard;
};

// Every class in projective coordinates.
DistinguishedClasses distinguished_classes(const SignedBipartiteGraph& b);

// d(v) = M bar(v) in projective coordinates, M = G^-1 bar(G).
QTMatrix d_matrix(const SignedBipartiteGraph& b);
K0Vector apply_d(const SignedBipartiteGraph& b, const K0Vector& x);

// Transport along Koszul duality. Input in the simple basis of A(b); output in
// the projective basis of A(dual(b)), ordered by dual(b).vertices(). Each
// coordinate undergoes q -> -q^-1, and vertices of E0(b) pick up a factor t.
K0Vector koszul_transport(const SignedBipartiteGraph& b, const K0Vector& x);

}  // namespace qlat
