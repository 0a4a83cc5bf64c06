#pragma once

#include <algorithm>
#include <random>

#include "qlat/bipartite.hpp"
#include "qlat/linalg.hpp"

namespace qlat::testing {

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo = -3, int hi = 3, int max_coeff = 5) {
  std::uniform_int_distribution<int> deg(lo, hi);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  const int d = deg(rng);
  const int n = len(rng);
  std::vector<Integer> c;
  for (int i = 0; i < n; ++i) c.emplace_back(coef(rng));
  return LaurentPoly(d, std::move(c));
}

inline QTElement random_qt(std::mt19937_64& rng) { return {random_poly(rng), random_poly(rng)}; }

inline LaurentMatrix random_laurent_matrix(std::mt19937_64& rng, std::size_t n, int lo = -2,
                                           int hi = 2, int max_coeff = 3) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, lo, hi, max_coeff);
  return m;
}

// Random signed permutation matrix.
inline LaurentMatrix random_signed_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  LaurentMatrix p(n, n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t j = 0; j < n; ++j) p(perm[j], j) = LaurentPoly(coin(rng) ? 1 : -1);
  return p;
}

// Product of random elementary operations: row additions with Laurent
// multipliers, signed permutation, and diagonal units. det is ±q^k.
inline LaurentMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 4) {
  LaurentMatrix t = random_signed_permutation(rng, n);
  if (n < 2) {
    std::uniform_int_distribution<int> k(-2, 2);
    return t * LaurentMatrix{{LaurentPoly::q(k(rng))}};
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> shift(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    LaurentMatrix e = LaurentMatrix::identity(n);
    e(i, j) = random_poly(rng, -1, 1, 2);
    LaurentMatrix d = LaurentMatrix::identity(n);
    d(j, j) = LaurentPoly::q(shift(rng));
    t = t * e * d;
  }
  return t;
}

// Vertices 1..n0 in part 0, n0+1..n0+n1 in part 1; each pair adjacent with
// the given probability, sign uniform.
inline SignedBipartiteGraph random_bipartite(std::mt19937_64& rng, int n0, int n1,
                                             double density = 0.5) {
  std::vector<int> p0, p1;
  for (int i = 1; i <= n0; ++i) p0.push_back(i);
  for (int j = n0 + 1; j <= n0 + n1; ++j) p1.push_back(j);
  std::bernoulli_distribution adjacent(density), coin(0.5);
  std::vector<SignedEdge> edges;
  for (int i : p0)
    for (int j : p1)
      if (adjacent(rng)) edges.push_back({i, j, coin(rng) ? 1 : -1});
  return SignedBipartiteGraph(p0, p1, edges);
}

// Every bipartite adjacency pattern with n0 + n1 <= max_vertices (labeled,
// ids as in random_bipartite), signs drawn at random.
inline std::vector<SignedBipartiteGraph> all_bipartite_shapes(std::mt19937_64& rng,
                                                              int max_vertices) {
  std::vector<SignedBipartiteGraph> out;
  std::bernoulli_distribution coin(0.5);
  for (int n = 1; n <= max_vertices; ++n)
    for (int n0 = 0; n0 <= n; ++n0) {
      const int n1 = n - n0, cells = n0 * n1;
      std::vector<int> p0, p1;
      for (int i = 1; i <= n0; ++i) p0.push_back(i);
      for (int j = n0 + 1; j <= n; ++j) p1.push_back(j);
      for (long mask = 0; mask < (1L << cells); ++mask) {
        std::vector<SignedEdge> edges;
        for (int c = 0; c < cells; ++c)
          if (mask >> c & 1) edges.push_back({p0[c / n1], p1[c % n1], coin(rng) ? 1 : -1});
        out.emplace_back(p0, p1, edges);
      }
    }
  return out;
}

}  // namespace qlat::testing
