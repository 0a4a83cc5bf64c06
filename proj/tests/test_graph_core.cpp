#include <doctest.h>

#include "qlat/errors.hpp"
#include "qlat/family.hpp"
#include "qlat/graph.hpp"
#include "qlat/linalg.hpp"

using namespace qlat;

namespace {

OrientedMultigraph triangle() { return OrientedMultigraph(3, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}}); }
OrientedMultigraph theta() { return OrientedMultigraph(2, {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}}); }

OrientedMultigraph k4() {
  return OrientedMultigraph(4, {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}, {4, 2, 3}, {5, 2, 4}, {6, 3, 4}});
}

// Net flow into each vertex; zero for every cycle.
std::vector<int> boundary(const OrientedMultigraph& g, const SignedEdgeVector& v) {
  std::vector<int> b(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const Edge& e : g.edges()) {
    b[e.head] += v[e.id - 1];
    b[e.tail] -= v[e.id - 1];
  }
  return b;
}

int dot(const SignedEdgeVector& a, const SignedEdgeVector& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Kirchhoff count: det of the reduced Laplacian.
long kirchhoff(const OrientedMultigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n == 1) return 1;
  LaurentMatrix lap(n - 1, n - 1, LaurentPoly(0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto a = static_cast<std::size_t>(e.tail - 1), b = static_cast<std::size_t>(e.head - 1);
    if (a < n - 1) lap(a, a) += 1;
    if (b < n - 1) lap(b, b) += 1;
    if (a < n - 1 && b < n - 1) {
      lap(a, b) -= 1;
      lap(b, a) -= 1;
    }
  }
  return det(lap).coeff(0).get_si();
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(triangle(), SpanningTree({1, 2})).ok());
  const OrientedMultigraph path(2, {{1, 1, 2}});
  auto r = validate(path, SpanningTree({1}));
  CHECK_FALSE(r.ok());
  CHECK(r.bridges == std::vector<int>{1});
  r = validate(path, SpanningTree({1}), BridgePolicy::allow);
  CHECK(r.ok());
  CHECK(r.bridges_overridden);
  r = validate(triangle(), SpanningTree({1}));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.tree_valid);
  // Loops are never bridges, and never tree edges.
  const OrientedMultigraph looped(3, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}, {4, 2, 2}});
  CHECK(find_bridges(looped).empty());
  CHECK_FALSE(validate(looped, SpanningTree({1, 4})).ok());
  // Several problems at once.
  const OrientedMultigraph split(4, {{1, 1, 2}, {2, 3, 4}});
  r = validate(split, SpanningTree({1, 2, 7}));
  CHECK_FALSE(r.connected);
  CHECK(r.violations.size() >= 3);
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(OrientedMultigraph(2, {{1, 1, 2}, {1, 2, 1}}), GraphError);
  CHECK_THROWS_AS(OrientedMultigraph(2, {{1, 1, 2}, {3, 2, 1}}), GraphError);
  CHECK_THROWS_AS(OrientedMultigraph(2, {{1, 1, 3}}), GraphError);
  CHECK_THROWS_AS(SpanningTree({1, 1}), GraphError);
}

TEST_CASE("fundamental_cycle") {
  const SpanningTree t({1, 2});
  CHECK(fundamental_cycle(triangle(), t, 3) == SignedEdgeVector{-1, -1, 1});
  CHECK(fundamental_cycle(theta(), SpanningTree({1}), 2) == SignedEdgeVector{-1, 1, 0});
  const OrientedMultigraph looped(2, {{1, 1, 2}, {2, 2, 1}, {3, 1, 1}});
  CHECK(fundamental_cycle(looped, SpanningTree({1}), 3) == SignedEdgeVector{0, 0, 1});
  CHECK(fundamental_cycle(looped, SpanningTree({1}), 2) == SignedEdgeVector{1, 1, 0});
  CHECK_THROWS_AS(fundamental_cycle(triangle(), t, 1), GraphError);
  CHECK_THROWS_AS(fundamental_cycle(triangle(), SpanningTree({1}), 3), GraphError);
}

TEST_CASE("fundamental_cut") {
  const SpanningTree t({1, 2});
  CHECK(fundamental_cut(triangle(), t, 1) == SignedEdgeVector{1, 0, 1});
  CHECK(fundamental_cut(triangle(), t, 2) == SignedEdgeVector{0, 1, 1});
  const OrientedMultigraph path(3, {{1, 1, 2}, {2, 3, 2}});
  CHECK(fundamental_cut(path, SpanningTree({1, 2}), 2) == SignedEdgeVector{0, 1});
  CHECK(fundamental_cycle(triangle(), t, 3)[0] == -1);
  CHECK(fundamental_cut(triangle(), t, 1)[2] == 1);
  CHECK_THROWS_AS(fundamental_cut(triangle(), t, 3), GraphError);
}

TEST_CASE("enumerate_spanning_trees") {
  CHECK(enumerate_spanning_trees(triangle()).size() == 3);
  CHECK(enumerate_spanning_trees(k4()).size() == 16);
  const OrientedMultigraph path(3, {{1, 1, 2}, {2, 3, 2}});
  const auto trees = enumerate_spanning_trees(path);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0] == SpanningTree({1, 2}));
  CHECK_THROWS_AS(enumerate_spanning_trees(OrientedMultigraph(3, {{1, 1, 2}})), GraphError);
  CHECK(enumerate_spanning_trees(OrientedMultigraph(1, {{1, 1, 1}})).size() == 1);
}

TEST_CASE("tree_overlap_counts") {
  CHECK(tree_overlap_counts(triangle(), SpanningTree({1, 2})) == std::vector<long>{1, 2, 0});
  const OrientedMultigraph path(3, {{1, 1, 2}, {2, 3, 2}});
  CHECK(tree_overlap_counts(path, SpanningTree({1, 2})) == std::vector<long>{1, 0, 0});
  CHECK(tree_overlap_counts(k4(), SpanningTree({1, 2, 3})) == std::vector<long>{1, 6, 9, 0});
  CHECK(tree_overlap_counts(theta(), SpanningTree({1})) == std::vector<long>{1, 2});
}

TEST_CASE("cycle_space_gf2") {
  const auto tri = cycle_space_gf2(triangle());
  REQUIRE(tri.size() == 1);
  CHECK(tri[0] == 0b111);
  CHECK(cycle_space_gf2(OrientedMultigraph(3, {{1, 1, 2}, {2, 3, 2}})).empty());
  CHECK(cycle_space_gf2(theta()).size() == 2);
}

TEST_CASE("family generator") {
  const auto fam = bridgeless_family(3);
  // 1 vertex: 1, 2 or 3 loops. 2 vertices: 2 parallel; 2 parallel + loop; 3 parallel. 3: triangle.
  CHECK(fam.size() == 7);
  for (const auto& g : bridgeless_family(5)) {
    CHECK(is_connected(g));
    CHECK(find_bridges(g).empty());
  }
  const auto loopless = bridgeless_family(5, false);
  for (const auto& g : loopless)
    for (const Edge& e : g.edges()) CHECK_FALSE(e.is_loop());
  CHECK(loopless.size() < bridgeless_family(5).size());
}

TEST_CASE("properties over every bridgeless graph with at most 5 edges") {
  int instances = 0;
  for (const auto& g : bridgeless_family(5)) {
    const auto trees = enumerate_spanning_trees(g);
    CHECK(static_cast<long>(trees.size()) == kirchhoff(g));
    for (const auto& t : trees) {
      ++instances;
      REQUIRE(validate(g, t).ok());
      std::vector<SignedEdgeVector> cycles, cuts;
      for (const Edge& e : g.edges()) {
        if (t.contains(e.id)) {
          const auto k = fundamental_cut(g, t, e.id);
          CHECK(k[e.id - 1] == 1);
          for (int other : t.edges())
            if (other != e.id) CHECK(k[other - 1] == 0);
          cuts.push_back(k);
        } else {
          const auto c = fundamental_cycle(g, t, e.id);
          CHECK(c[e.id - 1] == 1);
          for (const Edge& x : g.edges())
            if (x.id != e.id && !t.contains(x.id)) CHECK(c[x.id - 1] == 0);
          for (int b : boundary(g, c)) CHECK(b == 0);
          cycles.push_back(c);
        }
      }
      for (const auto& k : cuts)
        for (const auto& c : cycles) CHECK(dot(k, c) == 0);
      // Sign duality between cycles and cuts.
      for (int i : t.edges())
        for (const Edge& j : g.edges())
          if (!t.contains(j.id))
            CHECK(fundamental_cycle(g, t, j.id)[i - 1] == -fundamental_cut(g, t, i)[j.id - 1]);
      const auto c = tree_overlap_counts(g, t);
      CHECK(c[0] == 1);
      long sum = 0;
      for (long x : c) sum += x;
      CHECK(sum == static_cast<long>(trees.size()));
    }
    CHECK(static_cast<int>(cycle_space_gf2(g).size()) == g.edge_count() - g.vertex_count() + 1);
  }
  CHECK(instances == 136);
}
