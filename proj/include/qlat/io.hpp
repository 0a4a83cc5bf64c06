#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qlat/bipartite.hpp"
#include "qlat/graph.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

// Graph files:
//   graph <name>
//   vertices <n>
//   edge <id> <tail> <head> [tree]
// Bipartite files:
//   bipartite <name>
//   part0 <ids...>
//   part1 <ids...>
//   sedge <i> <j> <+1|-1>
// Blank lines and text after '#' are ignored. Errors are ParseError with the
// 1-based line and column of the offending token.

struct GraphInput {
  std::string name;
  OrientedMultigraph graph;
  SpanningTree tree;
};

struct BipartiteInput {
  std::string name;
  SignedBipartiteGraph graph;
};

GraphInput parse_graph(const std::string& text);
BipartiteInput parse_bipartite(const std::string& text);
// Dispatches on the first keyword.
std::variant<GraphInput, BipartiteInput> parse_input(const std::string& text);

// Canonical files: edges by id, parts and sedges sorted, single spaces.
std::string format_graph(const GraphInput& g);
std::string format_bipartite(const BipartiteInput& b);

enum class Format { text, json, latex };

// Text: `c*q^k` sums in increasing degree. LaTeX: q^{k}, t, \frac.
std::string latex(const LaurentPoly& p);
std::string latex(const QTElement& x);
std::string latex(const QFraction& x);

template <class T>
std::string render(const T& x, Format f);
template <class T>
std::string render(const Matrix<T>& m, Format f);

extern template std::string render(const LaurentPoly&, Format);
extern template std::string render(const QTElement&, Format);
extern template std::string render(const QFraction&, Format);
extern template std::string render(const LaurentMatrix&, Format);
extern template std::string render(const QTMatrix&, Format);
extern template std::string render(const FractionMatrix&, Format);
extern template std::string render(const IntMatrix&, Format);

nlohmann::json to_json(const SignedBipartiteGraph& b);

}  // namespace qlat
