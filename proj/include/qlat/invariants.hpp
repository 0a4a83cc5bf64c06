#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlat/bipartite.hpp"
#include "qlat/graph.hpp"
#include "qlat/qlattice.hpp"

namespace qlat {

// Rows are vertices 1..n; columns are tree edges by id, then non-tree edges by
// id. Tree columns carry -1 at the tail and +1 at the head; non-tree columns
// carry -q and +q. Loop columns are zero.
LaurentMatrix q_incidence(const OrientedMultigraph& g, const SpanningTree& t);
// Edge id of each column of q_incidence.
std::vector<int> q_incidence_columns(const OrientedMultigraph& g, const SpanningTree& t);

struct MatrixTreeReport {
  LaurentMatrix d;    // q-incidence
  LaurentMatrix d0;   // last vertex row removed
  LaurentMatrix q0;   // d0 d0^t
  LaurentPoly det_q0;     // normalized
  LaurentPoly enum_poly;  // sum c_i q^(2i)
  LaurentPoly cut_det;    // normalized det of the q-cut lattice
  bool det_matches_enum = false;
  bool det_matches_cut = false;

  bool ok() const { return det_matches_enum && det_matches_cut; }
};

MatrixTreeReport q_matrix_tree(const OrientedMultigraph& g, const SpanningTree& t,
                               BridgePolicy policy = BridgePolicy::reject);

// sum_i c_i q^(2i) from tree_overlap_counts; no matrix code involved.
LaurentPoly matrix_tree_enum_oracle(const OrientedMultigraph& g, const SpanningTree& t);

// r x r matrix (r = n - 1), rows vertices 1..r, columns tree edges by id:
// +1 when v_i is on the tail side of the cut and v_n on the head side, -1 for
// the reverse, 0 when v_i and v_n are on the same side. T^t Q0 T is the cut Gram.
LaurentMatrix cut_basis_change(const OrientedMultigraph& g, const SpanningTree& t);

struct GlueReport {
  bool orthogonal = false;  // <P_i, L_j> = 0 for i in E1, j in E0
  bool det_equal = false;   // normalized flow det == normalized cut det
  bool unimodular = false;  // det of the K0 Gram normalizes to 1
  LaurentPoly flow_det, cut_det;

  bool ok() const { return orthogonal && det_equal && unimodular; }
};

GlueReport verify_glue(const SignedBipartiteGraph& b);

// Edge bijection F (F[id-1] = image id) with F(T1) = T2 mapping the cycle
// space of g1 onto that of g2; lexicographically least, or nullopt.
std::optional<std::vector<int>> two_iso_search(const OrientedMultigraph& g1, const SpanningTree& t1,
                                               const OrientedMultigraph& g2, const SpanningTree& t2);

// True when F maps every cycle of g1 to an element of the cycle space of g2.
bool is_cycle_preserving(const OrientedMultigraph& g1, const OrientedMultigraph& g2,
                         const std::vector<int>& f);

struct Q2IsoReport {
  bool flow_iso = false;
  bool two_iso = false;
  bool cut_iso = false;
  std::optional<SignedPermutation> flow_witness, cut_witness;
  std::optional<std::vector<int>> edge_witness;

  bool agree() const { return flow_iso == two_iso && two_iso == cut_iso; }
};

// Refuses (HypothesisError) graphs with loops or bridges.
Q2IsoReport verify_q2iso_pair(const OrientedMultigraph& g1, const SpanningTree& t1,
                              const OrientedMultigraph& g2, const SpanningTree& t2);

// Signed bipartite graphs with parts of sizes n0 x n1 (both at most max_part),
// no isolated vertices, whose q-flow lattices are isomorphic while their q-cut
// lattices are not. Returns the first such pair in enumeration order.
std::optional<std::pair<SignedBipartiteGraph, SignedBipartiteGraph>> find_flow_cut_discrepancy(
    int max_part);

struct CheckResult {
  std::string name;
  bool pass;
};

// Every per-instance invariant of the library, evaluated on one input.
std::vector<CheckResult> verify_bipartite(const SignedBipartiteGraph& b);
std::vector<CheckResult> verify_graph(const OrientedMultigraph& g, const SpanningTree& t);

}  // namespace qlat
