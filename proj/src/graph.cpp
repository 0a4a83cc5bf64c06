#include "qlat/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "qlat/errors.hpp"

namespace qlat {

OrientedMultigraph::OrientedMultigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw GraphError("graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.id != static_cast<int>(k) + 1)
      throw GraphError("edge ids must be unique and contiguous from 1 (problem at id " +
                       std::to_string(e.id) + ")");
    if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_)
      throw GraphError("edge " + std::to_string(e.id) + " has an endpoint outside 1.." +
                       std::to_string(n_));
  }
}

const Edge& OrientedMultigraph::edge(int id) const {
  if (id < 1 || id > edge_count()) throw GraphError("no edge with id " + std::to_string(id));
  return edges_[static_cast<std::size_t>(id - 1)];
}

OrientedMultigraph OrientedMultigraph::reoriented(int id) const {
  OrientedMultigraph g = *this;
  Edge& e = g.edges_.at(static_cast<std::size_t>(edge(id).id - 1));
  std::swap(e.tail, e.head);
  return g;
}

bool operator==(const OrientedMultigraph& a, const OrientedMultigraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t k = 0; k < a.edges_.size(); ++k)
    if (a.edges_[k].tail != b.edges_[k].tail || a.edges_[k].head != b.edges_[k].head) return false;
  return true;
}

SpanningTree::SpanningTree(std::vector<int> edge_ids) : ids_(std::move(edge_ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw GraphError("spanning tree lists an edge twice");
}

bool SpanningTree::contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Connected components ignoring edge `skip` (0 = none).
int component_count(const OrientedMultigraph& g, int skip = 0) {
  DisjointSets ds(g.vertex_count());
  int comps = g.vertex_count();
  for (const Edge& e : g.edges())
    if (e.id != skip && ds.unite(e.tail, e.head)) --comps;
  return comps;
}

// Tree rooted at vertex 1.
struct RootedTree {
  std::vector<int> parent, parent_edge, depth;
};

RootedTree root_tree(const OrientedMultigraph& g, const SpanningTree& t) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> adj(n + 1);
  for (int id : t.edges()) {
    const Edge& e = g.edge(id);
    adj[e.tail].push_back(id);
    adj[e.head].push_back(id);
  }
  RootedTree r{std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0), std::vector<int>(n + 1, -1)};
  std::queue<int> queue;
  queue.push(1);
  r.depth[1] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int id : adj[v]) {
      const Edge& e = g.edge(id);
      const int w = e.tail == v ? e.head : e.tail;
      if (r.depth[w] >= 0) continue;
      r.depth[w] = r.depth[v] + 1;
      r.parent[w] = v;
      r.parent_edge[w] = id;
      queue.push(w);
    }
  }
  return r;
}

void require_tree(const OrientedMultigraph& g, const SpanningTree& t) {
  if (!is_spanning_tree(g, t)) throw GraphError("edge set is not a spanning tree of the graph");
}

}  // namespace

bool is_connected(const OrientedMultigraph& g) { return component_count(g) == 1; }

std::vector<int> find_bridges(const OrientedMultigraph& g) {
  std::vector<int> out;
  const int base = component_count(g);
  for (const Edge& e : g.edges())
    if (!e.is_loop() && component_count(g, e.id) > base) out.push_back(e.id);
  return out;
}

bool is_spanning_tree(const OrientedMultigraph& g, const SpanningTree& t) {
  if (static_cast<int>(t.size()) != g.vertex_count() - 1) return false;
  DisjointSets ds(g.vertex_count());
  for (int id : t.edges()) {
    if (id < 1 || id > g.edge_count()) return false;
    const Edge& e = g.edge(id);
    if (!ds.unite(e.tail, e.head)) return false;  // loop or cycle
  }
  return true;
}

ValidationReport validate(const OrientedMultigraph& g, const SpanningTree& t, BridgePolicy policy) {
  ValidationReport r;
  r.connected = is_connected(g);
  if (!r.connected) r.violations.push_back("graph is disconnected");
  r.bridges = find_bridges(g);
  if (!r.bridges.empty()) {
    std::string msg = "graph has bridges:";
    for (int id : r.bridges) msg += " " + std::to_string(id);
    if (policy == BridgePolicy::allow)
      r.bridges_overridden = true;
    else
      r.violations.push_back(msg);
  }
  if (static_cast<int>(t.size()) != g.vertex_count() - 1) {
    r.tree_valid = false;
    r.violations.push_back("tree has " + std::to_string(t.size()) + " edges, expected " +
                           std::to_string(g.vertex_count() - 1));
  }
  DisjointSets ds(g.vertex_count());
  for (int id : t.edges()) {
    if (id < 1 || id > g.edge_count()) {
      r.tree_valid = false;
      r.violations.push_back("tree edge " + std::to_string(id) + " does not exist");
      continue;
    }
    const Edge& e = g.edge(id);
    if (e.is_loop()) {
      r.tree_valid = false;
      r.violations.push_back("tree edge " + std::to_string(id) + " is a loop");
    } else if (!ds.unite(e.tail, e.head)) {
      r.tree_valid = false;
      r.violations.push_back("tree edge " + std::to_string(id) + " closes a cycle");
    }
  }
  return r;
}

SpanningTree bfs_tree(const OrientedMultigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> adj(n + 1);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.tail].push_back(e.id);
    adj[e.head].push_back(e.id);
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<int> ids;
  std::queue<int> queue;
  queue.push(1);
  seen[1] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int id : adj[v]) {
      const Edge& e = g.edge(id);
      const int w = e.tail == v ? e.head : e.tail;
      if (seen[w]) continue;
      seen[w] = true;
      ids.push_back(id);
      queue.push(w);
    }
  }
  if (ids.size() + 1 != n) throw GraphError("graph is disconnected");
  return SpanningTree(std::move(ids));
}

SignedEdgeVector fundamental_cycle(const OrientedMultigraph& g, const SpanningTree& t, int f) {
  const Edge& ef = g.edge(f);
  if (t.contains(f)) throw GraphError("edge " + std::to_string(f) + " is a tree edge");
  require_tree(g, t);
  SignedEdgeVector v(static_cast<std::size_t>(g.edge_count()), 0);
  v[f - 1] = 1;
  if (ef.is_loop()) return v;
  // After f (tail -> head), walk the tree from head back to tail.
  const RootedTree r = root_tree(g, t);
  int up = ef.head, down = ef.tail;
  auto climb = [&](int& x, bool outward) {
    const Edge& e = g.edge(r.parent_edge[x]);
    const int from = outward ? x : r.parent[x];
    v[e.id - 1] = e.tail == from ? 1 : -1;
    x = r.parent[x];
  };
  while (r.depth[up] > r.depth[down]) climb(up, true);
  while (r.depth[down] > r.depth[up]) climb(down, false);
  while (up != down) {
    climb(up, true);
    climb(down, false);
  }
  return v;
}

SignedEdgeVector fundamental_cut(const OrientedMultigraph& g, const SpanningTree& t, int e) {
  const Edge& ee = g.edge(e);
  if (!t.contains(e)) throw GraphError("edge " + std::to_string(e) + " is not a tree edge");
  require_tree(g, t);
  DisjointSets ds(g.vertex_count());
  for (int id : t.edges())
    if (id != e) ds.unite(g.edge(id).tail, g.edge(id).head);
  const int side0 = ds.find(ee.tail);
  SignedEdgeVector v(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Edge& x : g.edges()) {
    const bool t0 = ds.find(x.tail) == side0, h0 = ds.find(x.head) == side0;
    if (t0 && !h0) v[x.id - 1] = 1;
    if (!t0 && h0) v[x.id - 1] = -1;
  }
  return v;
}

namespace {

void extend_trees(const OrientedMultigraph& g, std::size_t next, DisjointSets ds,
                  std::vector<int>& chosen, std::vector<SpanningTree>& out) {
  const std::size_t need = static_cast<std::size_t>(g.vertex_count() - 1);
  if (chosen.size() == need) {
    out.emplace_back(chosen);
    return;
  }
  if (need - chosen.size() > g.edges().size() - next) return;
  const Edge& e = g.edges()[next];
  if (!e.is_loop() && ds.find(e.tail) != ds.find(e.head)) {
    DisjointSets contracted = ds;
    contracted.unite(e.tail, e.head);
    chosen.push_back(e.id);
    extend_trees(g, next + 1, std::move(contracted), chosen, out);
    chosen.pop_back();
  }
  extend_trees(g, next + 1, std::move(ds), chosen, out);
}

}  // namespace

std::vector<SpanningTree> enumerate_spanning_trees(const OrientedMultigraph& g) {
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  std::vector<SpanningTree> out;
  std::vector<int> chosen;
  extend_trees(g, 0, DisjointSets(g.vertex_count()), chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> tree_overlap_counts(const OrientedMultigraph& g, const SpanningTree& t) {
  require_tree(g, t);
  const std::size_t r = t.size();
  std::vector<long> c(r + 1, 0);
  for (const SpanningTree& other : enumerate_spanning_trees(g)) {
    std::size_t common = 0;
    for (int id : other.edges()) common += t.contains(id) ? 1 : 0;
    ++c[r - common];
  }
  return c;
}

std::vector<EdgeMask> fundamental_cycle_masks(const OrientedMultigraph& g, const SpanningTree& t) {
  if (g.edge_count() > 64) throw GraphError("GF(2) masks support at most 64 edges");
  std::vector<EdgeMask> out;
  for (const Edge& e : g.edges()) {
    if (t.contains(e.id)) continue;
    EdgeMask m = 0;
    const SignedEdgeVector c = fundamental_cycle(g, t, e.id);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) m |= EdgeMask{1} << k;
    out.push_back(m);
  }
  return out;
}

std::vector<EdgeMask> cycle_space_gf2(const OrientedMultigraph& g) {
  return fundamental_cycle_masks(g, bfs_tree(g));
}

}  // namespace qlat
