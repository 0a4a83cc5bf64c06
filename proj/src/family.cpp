#include "qlat/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace qlat {
namespace {

using Pair = std::pair<int, int>;
using EdgeList = std::vector<Pair>;  // sorted, first <= second

EdgeList canonical(const EdgeList& edges, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  do {
    EdgeList mapped;
    mapped.reserve(edges.size());
    for (auto [a, b] : edges) {
      int x = perm[a], y = perm[b];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

OrientedMultigraph to_graph(const EdgeList& edges, int n) {
  std::vector<Edge> out;
  int id = 1;
  for (auto [a, b] : edges) out.push_back({id++, a + 1, b + 1});
  return OrientedMultigraph(n, std::move(out));
}

// Multisets of size m drawn from pairs[from..].
void choose(const std::vector<Pair>& pairs, std::size_t from, int m, EdgeList& cur, int n,
            std::set<EdgeList>& seen, std::vector<EdgeList>& found) {
  if (m == 0) {
    const OrientedMultigraph g = to_graph(cur, n);
    if (!is_connected(g) || !find_bridges(g).empty()) return;
    EdgeList c = canonical(cur, n);
    if (seen.insert(c).second) found.push_back(std::move(c));
    return;
  }
  for (std::size_t k = from; k < pairs.size(); ++k) {
    cur.push_back(pairs[k]);
    choose(pairs, k, m - 1, cur, n, seen, found);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OrientedMultigraph> bridgeless_family(int max_edges, bool allow_loops) {
  std::vector<OrientedMultigraph> out;
  // A bridgeless connected graph on n >= 2 vertices has at least n edges.
  for (int n = 1; n <= std::max(1, max_edges); ++n) {
    std::vector<Pair> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        if (a != b || allow_loops) pairs.emplace_back(a, b);
    if (pairs.empty()) continue;
    for (int m = (n == 1 ? 1 : n); m <= max_edges; ++m) {
      std::set<EdgeList> seen;
      std::vector<EdgeList> found;
      EdgeList cur;
      choose(pairs, 0, m, cur, n, seen, found);
      std::sort(found.begin(), found.end());
      for (const auto& e : found) out.push_back(to_graph(e, n));
    }
  }
  return out;
}

}  // namespace qlat
