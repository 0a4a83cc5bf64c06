#include "qlat/bipartite.hpp"

#include <algorithm>
#include <set>

#include "qlat/errors.hpp"

namespace qlat {
namespace {

std::size_t position(const std::vector<int>& part, int v) {
  auto it = std::lower_bound(part.begin(), part.end(), v);
  if (it == part.end() || *it != v) throw GraphError("vertex " + std::to_string(v) + " is not in the expected part");
  return static_cast<std::size_t>(it - part.begin());
}

}  // namespace

SignedBipartiteGraph::SignedBipartiteGraph(std::vector<int> part0, std::vector<int> part1,
                                           const std::vector<SignedEdge>& edges)
    : part0_(std::move(part0)), part1_(std::move(part1)) {
  std::sort(part0_.begin(), part0_.end());
  std::sort(part1_.begin(), part1_.end());
  std::set<int> all;
  for (int v : part0_) all.insert(v);
  for (int v : part1_) all.insert(v);
  if (all.size() != size()) throw GraphError("bipartite vertex ids must be unique across both parts");
  if (!all.empty() && *all.begin() < 1) throw GraphError("bipartite vertex ids must be positive");
  signs_.assign(part0_.size() * part1_.size(), 0);
  for (const SignedEdge& e : edges) {
    if (sign(e.i, e.j) != 0)
      throw GraphError("duplicate signed edge " + std::to_string(e.i) + "-" + std::to_string(e.j));
    set_sign(e.i, e.j, e.sign);
  }
}

std::vector<int> SignedBipartiteGraph::vertices() const {
  std::vector<int> v = part0_;
  v.insert(v.end(), part1_.begin(), part1_.end());
  return v;
}

bool SignedBipartiteGraph::has_vertex(int v) const {
  return std::binary_search(part0_.begin(), part0_.end(), v) ||
         std::binary_search(part1_.begin(), part1_.end(), v);
}

bool SignedBipartiteGraph::in_part0(int v) const {
  if (std::binary_search(part0_.begin(), part0_.end(), v)) return true;
  if (std::binary_search(part1_.begin(), part1_.end(), v)) return false;
  throw GraphError("unknown vertex " + std::to_string(v));
}

std::size_t SignedBipartiteGraph::index(int v) const {
  return in_part0(v) ? position(part0_, v) : part0_.size() + position(part1_, v);
}

int SignedBipartiteGraph::sign(int i, int j) const {
  return sign_at(position(part0_, i), position(part1_, j));
}

void SignedBipartiteGraph::set_sign(int i, int j, int s) {
  if (s < -1 || s > 1) throw GraphError("edge sign must be -1, 0 or +1");
  signs_[position(part0_, i) * part1_.size() + position(part1_, j)] = s;
}

std::vector<int> SignedBipartiteGraph::neighbors(int v) const {
  std::vector<int> out;
  if (in_part0(v)) {
    const std::size_t r = position(part0_, v);
    for (std::size_t c = 0; c < part1_.size(); ++c)
      if (sign_at(r, c) != 0) out.push_back(part1_[c]);
  } else {
    const std::size_t c = position(part1_, v);
    for (std::size_t r = 0; r < part0_.size(); ++r)
      if (sign_at(r, c) != 0) out.push_back(part0_[r]);
  }
  return out;
}

std::vector<SignedEdge> SignedBipartiteGraph::edges() const {
  std::vector<SignedEdge> out;
  for (std::size_t r = 0; r < part0_.size(); ++r)
    for (std::size_t c = 0; c < part1_.size(); ++c)
      if (sign_at(r, c) != 0) out.push_back({part0_[r], part1_[c], sign_at(r, c)});
  return out;
}

IntMatrix SignedBipartiteGraph::adjacency() const {
  IntMatrix m(part0_.size(), part1_.size(), Integer(0));
  for (std::size_t r = 0; r < part0_.size(); ++r)
    for (std::size_t c = 0; c < part1_.size(); ++c) m(r, c) = sign_at(r, c);
  m.set_row_labels(id_labels(part0_));
  m.set_col_labels(id_labels(part1_));
  return m;
}

SignedBipartiteGraph build_bipartite(const OrientedMultigraph& g, const SpanningTree& t,
                                     BridgePolicy policy) {
  const ValidationReport report = validate(g, t, policy);
  if (!report.ok()) throw GraphError("invalid graph/tree pair: " + report.violations.front());
  std::vector<int> e1;
  for (const Edge& e : g.edges())
    if (!t.contains(e.id)) e1.push_back(e.id);
  SignedBipartiteGraph b(t.edges(), e1);
  for (int j : e1) {
    const SignedEdgeVector c = fundamental_cycle(g, t, j);
    for (int i : t.edges())
      if (c[i - 1] != 0) b.set_sign(i, j, c[i - 1]);
  }
  return b;
}

SignedBipartiteGraph dual(const SignedBipartiteGraph& b) {
  std::vector<SignedEdge> flipped;
  for (const SignedEdge& e : b.edges()) flipped.push_back({e.j, e.i, -e.sign});
  return SignedBipartiteGraph(b.part1(), b.part0(), flipped);
}

SignedBipartiteGraph switch_vertex(const SignedBipartiteGraph& b, int v) {
  const bool zero = b.in_part0(v);
  SignedBipartiteGraph out = b;
  for (int w : b.neighbors(v)) {
    const int i = zero ? v : w, j = zero ? w : v;
    out.set_sign(i, j, -b.sign(i, j));
  }
  return out;
}

std::vector<int> b_cycle(const SignedBipartiteGraph& b, int j) {
  if (b.in_part0(j)) throw GraphError("b_cycle: vertex " + std::to_string(j) + " is in part 0");
  std::vector<int> v(b.size(), 0);
  v[b.index(j)] = 1;
  for (int i : b.neighbors(j)) v[b.index(i)] = b.sign(i, j);
  return v;
}

std::vector<int> b_cut(const SignedBipartiteGraph& b, int i) {
  if (!b.in_part0(i)) throw GraphError("b_cut: vertex " + std::to_string(i) + " is in part 1");
  std::vector<int> v(b.size(), 0);
  v[b.index(i)] = 1;
  for (int j : b.neighbors(i)) v[b.index(j)] = -b.sign(i, j);
  return v;
}

IntMatrix classical_gram(const SignedBipartiteGraph& b, Side side) {
  const std::vector<int>& ids = side == Side::flow ? b.part1() : b.part0();
  std::vector<std::vector<int>> vecs;
  for (int v : ids) vecs.push_back(side == Side::flow ? b_cycle(b, v) : b_cut(b, v));
  IntMatrix m(ids.size(), ids.size(), Integer(0));
  for (std::size_t r = 0; r < ids.size(); ++r)
    for (std::size_t c = 0; c < ids.size(); ++c) {
      long s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += vecs[r][k] * vecs[c][k];
      m(r, c) = s;
    }
  m.set_labels(id_labels(ids));
  return m;
}

std::vector<std::string> id_labels(const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(std::to_string(v));
  return out;
}

}  // namespace qlat
