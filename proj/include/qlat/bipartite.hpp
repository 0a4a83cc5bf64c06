#pragma once

#include <string>
#include <vector>

#include "qlat/graph.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

struct SignedEdge {
  int i;     // in part 0
  int j;     // in part 1
  int sign;  // +1 or -1
};

/**
 * Bipartite graph with parts E0, E1 and edge signs in {-1, 0, +1}
 * (0 meaning non-adjacent). Vertex ids are positive and unique across both
 * parts; each part is kept sorted by id. The basis order used everywhere
 * downstream is E0 followed by E1.
 */
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph() = default;
  SignedBipartiteGraph(std::vector<int> part0, std::vector<int> part1,
                       const std::vector<SignedEdge>& edges = {});

  const std::vector<int>& part0() const { return part0_; }
  const std::vector<int>& part1() const { return part1_; }
  // E0 then E1.
  std::vector<int> vertices() const;
  std::size_t size() const { return part0_.size() + part1_.size(); }

  bool has_vertex(int v) const;
  bool in_part0(int v) const;
  // Position of v in vertices().
  std::size_t index(int v) const;

  // Sign by ids; throws GraphError unless i in E0 and j in E1.
  int sign(int i, int j) const;
  // Sign by positions within the parts.
  int sign_at(std::size_t r, std::size_t c) const { return signs_[r * part1_.size() + c]; }
  void set_sign(int i, int j, int s);

  // Neighbors of v in the opposite part, ascending.
  std::vector<int> neighbors(int v) const;
  std::vector<SignedEdge> edges() const;

  // Signed adjacency matrix M_B, rows E0, columns E1.
  IntMatrix adjacency() const;

  friend bool operator==(const SignedBipartiteGraph& a, const SignedBipartiteGraph& b) {
    return a.part0_ == b.part0_ && a.part1_ == b.part1_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<int> part0_, part1_;
  std::vector<int> signs_;  // row-major |E0| x |E1|
};

// E0 = T, E1 = E \ T, sign(i, j) = coefficient of i in the fundamental cycle of j.
// Throws GraphError when validate() reports violations under the policy.
SignedBipartiteGraph build_bipartite(const OrientedMultigraph& g, const SpanningTree& t,
                                     BridgePolicy policy = BridgePolicy::reject);

// Parts exchanged, every sign negated.
SignedBipartiteGraph dual(const SignedBipartiteGraph& b);

// Negates every sign at v.
SignedBipartiteGraph switch_vertex(const SignedBipartiteGraph& b, int v);

// Vectors over vertices() order.
std::vector<int> b_cycle(const SignedBipartiteGraph& b, int j);
std::vector<int> b_cut(const SignedBipartiteGraph& b, int i);

enum class Side { flow, cut };

// Euclidean Gram of the b_cycle (flow, indexed by E1) or b_cut (cut, indexed by E0) vectors.
IntMatrix classical_gram(const SignedBipartiteGraph& b, Side side);

std::vector<std::string> id_labels(const std::vector<int>& ids);

}  // namespace qlat
