#include "qlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "qlat/errors.hpp"
#include "qlat/json_io.hpp"

namespace qlat {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[k]))) {
        ++k;
        continue;
      }
      const std::size_t start = k;
      while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
      line.tokens.push_back({raw.substr(start, k - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) {
  throw ParseError(l.number, t.column, what);
}

int to_int(const Line& l, const Token& t, const char* what) {
  int v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    fail(l, t, std::string("expected an integer ") + what + ", got '" + t.text + "'");
  return v;
}

int positive(const Line& l, const Token& t, const char* what) {
  const int v = to_int(l, t, what);
  if (v < 1) fail(l, t, std::string(what) + " must be positive");
  return v;
}

void expect_arity(const Line& l, std::size_t lo, std::size_t hi, const char* usage) {
  if (l.tokens.size() < lo || l.tokens.size() > hi)
    fail(l, l.tokens[std::min(l.tokens.size() - 1, hi)], std::string("expected '") + usage + "'");
}

const Line& header(const std::vector<Line>& lines, const char* keyword) {
  if (lines.empty()) throw ParseError(1, 1, std::string("empty input, expected '") + keyword + " <name>'");
  const Line& h = lines.front();
  if (h.tokens[0].text != keyword) fail(h, h.tokens[0], std::string("expected '") + keyword + " <name>'");
  expect_arity(h, 2, 2, (std::string(keyword) + " <name>").c_str());
  return h;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

GraphInput parse_graph(const std::string& text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, "graph");
  int n = 0;
  struct Pending {
    Edge edge;
    bool tree;
    const Line* line;
  };
  std::map<int, Pending> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tokens[0].text;
    if (kw == "vertices") {
      if (n) fail(l, l.tokens[0], "vertex count given twice");
      expect_arity(l, 2, 2, "vertices <n>");
      n = positive(l, l.tokens[1], "vertex count");
    } else if (kw == "edge") {
      if (!n) fail(l, l.tokens[0], "'vertices <n>' must come before edges");
      expect_arity(l, 4, 5, "edge <id> <tail> <head> [tree]");
      const int id = positive(l, l.tokens[1], "edge id");
      if (const auto it = edges.find(id); it != edges.end())
        fail(l, l.tokens[1], "duplicate edge id " + std::to_string(id) + " (first on line " +
                                 std::to_string(it->second.line->number) + ")");
      int ends[2];
      for (int s = 0; s < 2; ++s) {
        ends[s] = to_int(l, l.tokens[2 + s], "vertex");
        if (ends[s] < 1 || ends[s] > n)
          fail(l, l.tokens[2 + s], "vertex " + l.tokens[2 + s].text + " out of range 1.." + std::to_string(n));
      }
      bool tree = false;
      if (l.tokens.size() == 5) {
        if (l.tokens[4].text != "tree") fail(l, l.tokens[4], "expected 'tree' or end of line");
        if (ends[0] == ends[1]) fail(l, l.tokens[4], "a loop cannot be a tree edge");
        tree = true;
      }
      edges.emplace(id, Pending{{id, ends[0], ends[1]}, tree, &l});
    } else {
      fail(l, l.tokens[0], "unknown keyword '" + kw + "'");
    }
  }
  if (!n) fail(h, h.tokens[0], "missing 'vertices <n>'");
  int expect = 1;
  for (const auto& [id, p] : edges) {
    if (id != expect) fail(*p.line, p.line->tokens[1], "edge ids must be contiguous from 1; missing " + std::to_string(expect));
    ++expect;
  }
  // Tree edges must form a spanning tree.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> tree_ids;
  std::vector<Edge> list;
  for (const auto& [id, p] : edges) {
    list.push_back(p.edge);
    if (!p.tree) continue;
    const int a = find(parent, p.edge.tail), b = find(parent, p.edge.head);
    if (a == b) fail(*p.line, p.line->tokens[4], "tree edges close a cycle at edge " + std::to_string(id));
    parent[a] = b;
    tree_ids.push_back(id);
  }
  if (static_cast<int>(tree_ids.size()) != n - 1)
    fail(h, h.tokens[0], "tree edges do not span all " + std::to_string(n) + " vertices");
  return {h.tokens[1].text, OrientedMultigraph(n, std::move(list)), SpanningTree(std::move(tree_ids))};
}

BipartiteInput parse_bipartite(const std::string& text) {
  const auto lines = tokenize(text);
  const Line& h = header(lines, "bipartite");
  std::vector<int> parts[2];
  bool seen[2] = {false, false};
  std::map<int, int> part_of;
  std::map<std::pair<int, int>, int> sedges;
  std::vector<SignedEdge> list;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tokens[0].text;
    if (kw == "part0" || kw == "part1") {
      const int p = kw == "part1";
      if (seen[p]) fail(l, l.tokens[0], kw + " given twice");
      if (!list.empty()) fail(l, l.tokens[0], kw + " must come before sedges");
      seen[p] = true;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) {
        const int v = positive(l, l.tokens[t], "vertex id");
        if (part_of.count(v)) fail(l, l.tokens[t], "duplicate vertex id " + std::to_string(v));
        part_of[v] = p;
        parts[p].push_back(v);
      }
    } else if (kw == "sedge") {
      if (!seen[0] || !seen[1]) fail(l, l.tokens[0], "'part0' and 'part1' must come before sedges");
      expect_arity(l, 4, 4, "sedge <i> <j> <+1|-1>");
      const int i = to_int(l, l.tokens[1], "vertex"), j = to_int(l, l.tokens[2], "vertex");
      if (auto it = part_of.find(i); it == part_of.end() || it->second != 0)
        fail(l, l.tokens[1], "vertex " + l.tokens[1].text + " is not in part0");
      if (auto it = part_of.find(j); it == part_of.end() || it->second != 1)
        fail(l, l.tokens[2], "vertex " + l.tokens[2].text + " is not in part1");
      const std::string& s = l.tokens[3].text;
      if (s != "+1" && s != "-1" && s != "1") fail(l, l.tokens[3], "sign must be +1 or -1");
      if (const auto it = sedges.find({i, j}); it != sedges.end())
        fail(l, l.tokens[1], "duplicate sedge " + std::to_string(i) + " " + std::to_string(j) +
                                 " (first on line " + std::to_string(it->second) + ")");
      sedges[{i, j}] = l.number;
      list.push_back({i, j, s == "-1" ? -1 : 1});
    } else {
      fail(l, l.tokens[0], "unknown keyword '" + kw + "'");
    }
  }
  for (int p = 0; p < 2; ++p)
    if (!seen[p]) fail(h, h.tokens[0], "missing 'part" + std::to_string(p) + "'");
  return {h.tokens[1].text, SignedBipartiteGraph(parts[0], parts[1], std::move(list))};
}

std::variant<GraphInput, BipartiteInput> parse_input(const std::string& text) {
  const auto lines = tokenize(text);
  if (!lines.empty() && lines.front().tokens[0].text == "bipartite") return parse_bipartite(text);
  return parse_graph(text);
}

std::string format_graph(const GraphInput& g) {
  std::ostringstream os;
  os << "graph " << g.name << "\nvertices " << g.graph.vertex_count() << '\n';
  for (const Edge& e : g.graph.edges()) {
    os << "edge " << e.id << ' ' << e.tail << ' ' << e.head;
    if (g.tree.contains(e.id)) os << " tree";
    os << '\n';
  }
  return os.str();
}

std::string format_bipartite(const BipartiteInput& b) {
  std::ostringstream os;
  os << "bipartite " << b.name << "\npart0";
  for (int v : b.graph.part0()) os << ' ' << v;
  os << "\npart1";
  for (int v : b.graph.part1()) os << ' ' << v;
  os << '\n';
  for (const SignedEdge& e : b.graph.edges()) os << "sedge " << e.i << ' ' << e.j << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
  return os.str();
}

namespace {

// Terms (degree, t-power, coefficient) in increasing degree, t^0 first.
using Term = std::tuple<int, int, Integer>;

std::string latex_terms(std::vector<Term> terms) {
  if (terms.empty()) return "0";
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t, c] : terms) {
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    const Integer mag = abs(c);
    const bool bare = k == 0 && t == 0;
    if (mag != 1 || bare) os << mag;
    if (k != 0) {
      os << 'q';
      if (k != 1) os << "^{" << k << '}';
    }
    if (t) os << 't';
  }
  return os.str();
}

void collect(const LaurentPoly& p, int t, std::vector<Term>& out) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) out.emplace_back(p.min_deg() + static_cast<int>(i), t, p.coeffs()[i]);
}

std::string plain(const Integer& x) { return x.get_str(); }
template <class T>
std::string plain(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string latex_cell(const Integer& x) { return x.get_str(); }
template <class T>
std::string latex_cell(const T& x) {
  return latex(x);
}

}  // namespace

std::string latex(const LaurentPoly& p) {
  std::vector<Term> terms;
  collect(p, 0, terms);
  return latex_terms(std::move(terms));
}

std::string latex(const QTElement& x) {
  std::vector<Term> terms;
  collect(x.even, 0, terms);
  collect(x.odd, 1, terms);
  return latex_terms(std::move(terms));
}

std::string latex(const QFraction& x) {
  if (x.is_laurent()) return latex(x.num());
  return "\\frac{" + latex(x.num()) + "}{" + latex(x.den()) + "}";
}

template <class T>
std::string render(const T& x, Format f) {
  switch (f) {
    case Format::json: return to_json(x).dump();
    case Format::latex: return latex_cell(x);
    default: return plain(x);
  }
}

template <class T>
std::string render(const Matrix<T>& m, Format f) {
  std::ostringstream os;
  if (f == Format::json) return to_json(m).dump();
  if (f == Format::latex) {
    os << "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << latex_cell(m(i, j));
      os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{bmatrix}";
    return os.str();
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << plain(m(i, j));
    os << ']';
  }
  return os.str();
}

template std::string render(const LaurentPoly&, Format);
template std::string render(const QTElement&, Format);
template std::string render(const QFraction&, Format);
template std::string render(const LaurentMatrix&, Format);
template std::string render(const QTMatrix&, Format);
template std::string render(const FractionMatrix&, Format);
template std::string render(const IntMatrix&, Format);

nlohmann::json to_json(const SignedBipartiteGraph& b) {
  nlohmann::json edges = nlohmann::json::array();
  for (const SignedEdge& e : b.edges()) edges.push_back({e.i, e.j, e.sign});
  return {{"part0", b.part0()}, {"part1", b.part1()}, {"sedges", edges}};
}

}  // namespace qlat
