#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qlat {

struct Edge {
  int id;
  int tail;
  int head;
  bool is_loop() const { return tail == head; }
};

/**
 * Oriented multigraph on vertices 1..n. Loops and parallel edges are allowed.
 * Edge ids are 1..m and edge(id) is O(1); edges() is ordered by id.
 */
class OrientedMultigraph {
 public:
  OrientedMultigraph() = default;
  // Edges may be given in any order; throws GraphError on bad ids or endpoints.
  OrientedMultigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const;

  // Same graph with edge id reversed.
  OrientedMultigraph reoriented(int id) const;

  friend bool operator==(const OrientedMultigraph& a, const OrientedMultigraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Set of edge ids, kept sorted.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<int> edge_ids);

  const std::vector<int>& edges() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(int id) const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.ids_ == b.ids_; }
  friend bool operator<(const SpanningTree& a, const SpanningTree& b) { return a.ids_ < b.ids_; }

 private:
  std::vector<int> ids_;
};

// Dense vector in Z^E; entry k belongs to edge id k + 1.
using SignedEdgeVector = std::vector<int>;

struct ValidationReport {
  bool connected = true;
  bool tree_valid = true;
  std::vector<int> bridges;      // ids, ascending
  bool bridges_overridden = false;  // warning: bridges present but accepted
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

enum class BridgePolicy { reject, allow };

// Never throws; collects every violation. With BridgePolicy::allow, bridges
// are reported through bridges_overridden instead of violations.
ValidationReport validate(const OrientedMultigraph& g, const SpanningTree& t,
                          BridgePolicy policy = BridgePolicy::reject);

bool is_connected(const OrientedMultigraph& g);
std::vector<int> find_bridges(const OrientedMultigraph& g);
// Tree-validity only (size, no loops, acyclic, spanning).
bool is_spanning_tree(const OrientedMultigraph& g, const SpanningTree& t);

// Breadth-first spanning tree from vertex 1, smallest edge ids first.
SpanningTree bfs_tree(const OrientedMultigraph& g);

// The tree must be valid (throws GraphError otherwise); bridges are tolerated.
SignedEdgeVector fundamental_cycle(const OrientedMultigraph& g, const SpanningTree& t, int f);
SignedEdgeVector fundamental_cut(const OrientedMultigraph& g, const SpanningTree& t, int e);

// Lexicographically sorted, duplicate-free. Throws GraphError when disconnected.
std::vector<SpanningTree> enumerate_spanning_trees(const OrientedMultigraph& g);

// c[i] = number of spanning trees T' with |T' ∩ T| = |T| - i.
std::vector<long> tree_overlap_counts(const OrientedMultigraph& g, const SpanningTree& t);

// Fundamental cycles of bfs_tree(g) as bit masks (bit id-1). Requires |E| <= 64.
using EdgeMask = std::uint64_t;
std::vector<EdgeMask> cycle_space_gf2(const OrientedMultigraph& g);
// Same, relative to a given tree; one mask per non-tree edge in id order.
std::vector<EdgeMask> fundamental_cycle_masks(const OrientedMultigraph& g, const SpanningTree& t);

}  // namespace qlat
