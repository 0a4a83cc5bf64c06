#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qlat/algebra.hpp"
#include "qlat/errors.hpp"
#include "qlat/family.hpp"
#include "qlat/invariants.hpp"
#include "qlat/io.hpp"
#include "qlat/json_io.hpp"
#include "qlat/qlattice.hpp"

namespace qlat::cli {

namespace {

using nlohmann::json;

// Input error that carries the file name for the diagnostic.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::variant<GraphInput, BipartiteInput> load(const std::string& path) {
  try {
    return parse_input(read_file(path));
  } catch (const ParseError& e) {
    throw InputError{path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what()};
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

GraphInput load_graph(const std::string& path) {
  auto in = load(path);
  if (auto* g = std::get_if<GraphInput>(&in)) return std::move(*g);
  throw InputError{path + ": expected a graph file"};
}

BipartiteInput load_bipartite(const std::string& path) {
  auto in = load(path);
  if (auto* b = std::get_if<BipartiteInput>(&in)) return std::move(*b);
  auto& g = std::get<GraphInput>(in);
  try {
    return {g.name, build_bipartite(g.graph, g.tree)};
  } catch (const GraphError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

struct Global {
  std::string format = "text";
  int jobs = 1;

  Format fmt() const { return format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text; }
};

template <class T>
void emit(std::ostream& out, const T& x, Format f) {
  out << render(x, f) << '\n';
}

LaurentMatrix side_gram(const SignedBipartiteGraph& b, bool flow) {
  return (flow ? flow_qlattice(b) : cut_qlattice(b)).gram();
}

// --- commands ---------------------------------------------------------------

int cmd_build(const Global& gl, const std::string& path, std::ostream& out) {
  const BipartiteInput b = load_bipartite(path);
  switch (gl.fmt()) {
    case Format::json: {
      json j = to_json(b.graph);
      j["name"] = b.name;
      out << j.dump() << '\n';
      break;
    }
    case Format::latex: emit(out, b.graph.adjacency(), Format::latex); break;
    default: out << format_bipartite(b);
  }
  return 0;
}

int cmd_dual(const Global& gl, const std::string& path, std::ostream& out) {
  const BipartiteInput b = load_bipartite(path);
  const BipartiteInput d{b.name + "_dual", dual(b.graph)};
  switch (gl.fmt()) {
    case Format::json: {
      json j = to_json(d.graph);
      j["name"] = d.name;
      out << j.dump() << '\n';
      break;
    }
    case Format::latex: emit(out, d.graph.adjacency(), Format::latex); break;
    default: out << format_bipartite(d);
  }
  return 0;
}

int cmd_gram(const Global& gl, bool flow, bool k0, const std::string& path, std::ostream& out) {
  const auto b = load_bipartite(path).graph;
  if (k0) {
    QTMatrix g = k0_gram(b);
    g.set_row_labels(id_labels(b.vertices()));
    g.set_col_labels(id_labels(b.vertices()));
    emit(out, g, gl.fmt());
  } else {
    emit(out, side_gram(b, flow), gl.fmt());
  }
  return 0;
}

int cmd_det(const Global& gl, bool flow, bool normalize, const std::string& path, std::ostream& out) {
  const auto b = load_bipartite(path).graph;
  const LaurentPoly d = det(side_gram(b, flow));
  emit(out, normalize ? normalize_unit(d).normalized : d, gl.fmt());
  return 0;
}

int cmd_matrix_tree(const Global& gl, bool oracle, const std::string& path, std::ostream& out) {
  const GraphInput g = load_graph(path);
  if (oracle) {
    emit(out, matrix_tree_enum_oracle(g.graph, g.tree), gl.fmt());
    return 0;
  }
  MatrixTreeReport r;
  try {
    r = q_matrix_tree(g.graph, g.tree);
  } catch (const GraphError& e) {
    throw InputError{path + ": " + e.what()};
  }
  const Format f = gl.fmt();
  if (f == Format::json) {
    out << json{{"D", to_json(r.d)},
                {"Q0", to_json(r.q0)},
                {"det_Q0", to_json(r.det_q0)},
                {"enum_poly", to_json(r.enum_poly)},
                {"cut_det", to_json(r.cut_det)},
                {"det_matches_enum", r.det_matches_enum},
                {"det_matches_cut", r.det_matches_cut}}
               .dump()
        << '\n';
  } else {
    const char* sep = f == Format::latex ? " = " : ":\n";
    out << "D" << sep << render(r.d, f) << '\n';
    out << (f == Format::latex ? "Q_0" : "Q0") << sep << render(r.q0, f) << '\n';
    out << "det Q0: " << render(r.det_q0, f) << '\n';
    out << "enumeration: " << render(r.enum_poly, f) << '\n';
    out << "cut det: " << render(r.cut_det, f) << '\n';
    out << "agreement: " << (r.ok() ? "yes" : "no") << '\n';
  }
  return r.ok() ? 0 : 1;
}

int cmd_iso(const Global& gl, bool flow, const std::string& a, const std::string& b, std::ostream& out) {
  const auto l1 = flow ? flow_qlattice(load_bipartite(a).graph) : cut_qlattice(load_bipartite(a).graph);
  const auto l2 = flow ? flow_qlattice(load_bipartite(b).graph) : cut_qlattice(load_bipartite(b).graph);
  std::optional<SignedPermutation> w;
  try {
    w = decide_iso(l1, l2);
  } catch (const HypothesisError& e) {
    throw InputError{e.what()};
  }
  const Format f = gl.fmt();
  if (f == Format::json) {
    json j{{"isomorphic", w.has_value()}};
    if (w) {
      std::vector<std::size_t> perm;
      for (std::size_t p : w->perm) perm.push_back(p + 1);
      j["perm"] = perm;
      j["signs"] = w->signs;
      j["matrix"] = to_json(w->matrix());
    }
    out << j.dump() << '\n';
  } else if (!w) {
    out << (f == Format::latex ? "\\text{not isomorphic}" : "not isomorphic") << '\n';
  } else if (f == Format::latex) {
    emit(out, w->matrix(), f);
  } else {
    out << "isomorphic\nperm:";
    for (std::size_t p : w->perm) out << ' ' << p + 1;
    out << "\nsigns:";
    for (int s : w->signs) out << ' ' << (s > 0 ? '+' : '-');
    out << "\nmatrix:\n" << render(w->matrix(), f) << '\n';
  }
  return 0;
}

int cmd_two_iso(const Global& gl, const std::string& a, const std::string& b, std::ostream& out) {
  const GraphInput g1 = load_graph(a), g2 = load_graph(b);
  const auto w = two_iso_search(g1.graph, g1.tree, g2.graph, g2.tree);
  if (gl.fmt() == Format::json) {
    json j{{"two_isomorphic", w.has_value()}};
    if (w) j["edge_map"] = *w;
    out << j.dump() << '\n';
  } else if (!w) {
    out << "no cycle-preserving bijection\n";
  } else {
    out << "edge map:";
    for (std::size_t k = 0; k < w->size(); ++k) out << ' ' << k + 1 << "->" << (*w)[k];
    out << '\n';
  }
  return 0;
}

std::string resolution_term(const ResolutionTerm& t, Format f) {
  std::ostringstream os;
  if (f == Format::latex) {
    os << "P_{" << t.vertex << "}";
    if (t.q_shift) os << "\\{" << t.q_shift << "\\}";
    if (t.t_shift) os << "\\langle " << t.t_shift << "\\rangle";
  } else {
    os << 'P' << t.vertex;
    if (t.q_shift) os << '{' << t.q_shift << '}';
    if (t.t_shift) os << '<' << t.t_shift << '>';
  }
  return os.str();
}

int cmd_algebra(const Global& gl, const std::string& what, const std::string& path, std::ostream& out) {
  const auto b = load_bipartite(path).graph;
  const Format f = gl.fmt();
  const auto labels = id_labels(b.vertices());
  if (what == "resolutions") {
    json all = json::array();
    for (int v : b.vertices()) {
      const Resolution r = resolve_simple(b, v);
      if (f == Format::json) {
        json degrees = json::array();
        for (const auto& deg : r.terms) {
          json terms = json::array();
          for (const auto& t : deg) terms.push_back({{"vertex", t.vertex}, {"q_shift", t.q_shift}, {"t_shift", t.t_shift}});
          degrees.push_back(terms);
        }
        all.push_back({{"vertex", v}, {"terms", degrees}});
        continue;
      }
      out << (f == Format::latex ? "L_{" + std::to_string(v) + "}: " : "L" + std::to_string(v) + ": ");
      for (std::size_t d = 0; d < r.terms.size(); ++d) {
        if (d) out << (f == Format::latex ? " \\leftarrow " : " <- ");
        for (std::size_t k = 0; k < r.terms[d].size(); ++k)
          out << (k ? (f == Format::latex ? " \\oplus " : " + ") : "") << resolution_term(r.terms[d][k], f);
      }
      out << '\n';
    }
    if (f == Format::json) out << all.dump() << '\n';
    return 0;
  }
  if (what == "classes") {
    const std::pair<const char*, Basis> families[] = {{"projective", Basis::projective},
                                                      {"simple", Basis::simple},
                                                      {"injective", Basis::injective},
                                                      {"standard", Basis::standard},
                                                      {"costandard", Basis::costandard}};
    json all = json::object();
    for (const auto& [name, basis] : families) {
      QTMatrix m = basis_matrix(b, basis);
      m.set_row_labels(labels);
      m.set_col_labels(labels);
      if (f == Format::json)
        all[name] = to_json(m);
      else
        out << name << ":\n" << render(m, f) << '\n';
    }
    if (f == Format::json) out << all.dump() << '\n';
    return 0;
  }
  QTMatrix h(b.size(), b.size());
  const auto ids = b.vertices();
  for (std::size_t r = 0; r < ids.size(); ++r)
    for (std::size_t c = 0; c < ids.size(); ++c) h(r, c) = hom_qtdim(b, ids[r], ids[c]);
  h.set_row_labels(labels);
  h.set_col_labels(labels);
  if (f == Format::text) out << "path basis size: " << path_basis(b).size() << '\n';
  emit(out, h, f);
  return 0;
}

// --- verify -----------------------------------------------------------------

struct Instance {
  OrientedMultigraph graph;
  SpanningTree tree;
};

std::string describe(const Instance& x) {
  std::ostringstream os;
  os << "n=" << x.graph.vertex_count() << " edges";
  for (const Edge& e : x.graph.edges()) os << ' ' << e.tail << '-' << e.head;
  os << " tree {";
  for (std::size_t k = 0; k < x.tree.edges().size(); ++k) os << (k ? "," : "") << x.tree.edges()[k];
  os << '}';
  return os.str();
}

// Runs f(k) for k in [0, n) on `jobs` threads; results land by index.
template <class F>
void parallel_for(std::size_t n, int jobs, F f) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || n < 2) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < n;) f(k);
    });
  for (auto& t : pool) t.join();
}

int cmd_verify(const Global& gl, const std::string& path, int family, std::ostream& out) {
  const Format f = gl.fmt();
  bool ok = true;
  json report = json::object();
  if (!path.empty()) {
    auto in = load(path);
    std::vector<CheckResult> checks;
    if (auto* g = std::get_if<GraphInput>(&in))
      checks = verify_graph(g->graph, g->tree);
    else
      checks = verify_bipartite(std::get<BipartiteInput>(in).graph);
    json arr = json::array();
    for (const auto& c : checks) {
      ok = ok && c.pass;
      if (f == Format::json)
        arr.push_back({{"name", c.name}, {"pass", c.pass}});
      else
        out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    }
    report["checks"] = arr;
  }
  if (family > 0) {
    std::vector<Instance> inst;
    for (const auto& g : bridgeless_family(family))
      for (const auto& t : enumerate_spanning_trees(g)) inst.push_back({g, t});
    std::vector<std::vector<std::string>> failed(inst.size());
    parallel_for(inst.size(), gl.jobs, [&](std::size_t k) {
      for (const auto& c : verify_graph(inst[k].graph, inst[k].tree))
        if (!c.pass) failed[k].push_back(c.name);
    });
    // Three-way q-2-isomorphism agreement on loopless pairs.
    std::vector<std::size_t> loopless;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      bool loops = false;
      for (const Edge& e : inst[k].graph.edges()) loops = loops || e.is_loop();
      if (!loops) loopless.push_back(k);
    }
    std::vector<std::vector<std::size_t>> disagree(loopless.size());
    parallel_for(loopless.size(), gl.jobs, [&](std::size_t a) {
      const Instance& x = inst[loopless[a]];
      for (std::size_t b = 0; b < loopless.size(); ++b) {
        const Instance& y = inst[loopless[b]];
        if (!verify_q2iso_pair(x.graph, x.tree, y.graph, y.tree).agree()) disagree[a].push_back(b);
      }
    });
    std::size_t bad = 0, bad_pairs = 0;
    json arr = json::array();
    for (std::size_t k = 0; k < inst.size(); ++k) {
      bad += !failed[k].empty();
      if (f == Format::json) {
        arr.push_back({{"index", k + 1}, {"instance", describe(inst[k])}, {"failed", failed[k]}});
        continue;
      }
      out << (failed[k].empty() ? "PASS " : "FAIL ") << "instance " << k + 1 << ": " << describe(inst[k]);
      for (const auto& name : failed[k]) out << " [" << name << ']';
      out << '\n';
    }
    json pairs = json::array();
    for (std::size_t a = 0; a < loopless.size(); ++a)
      for (std::size_t b : disagree[a]) {
        ++bad_pairs;
        pairs.push_back({loopless[a] + 1, loopless[b] + 1});
        if (f != Format::json)
          out << "FAIL q-2-isomorphism disagreement: instances " << loopless[a] + 1 << " and " << loopless[b] + 1 << '\n';
      }
    const std::size_t npairs = loopless.size() * loopless.size();
    if (f == Format::json) {
      report["family"] = {{"max_edges", family}, {"instances", arr}, {"q2iso_pairs", npairs}, {"q2iso_disagreements", pairs}};
    } else {
      out << (bad_pairs ? "FAIL " : "PASS ") << "q-2-isomorphism agreement on " << npairs << " loopless pairs\n";
      out << "family " << family << ": " << inst.size() << " instances, " << bad << " failing\n";
    }
    ok = ok && bad == 0 && bad_pairs == 0;
  }
  if (f == Format::json) {
    report["ok"] = ok;
    out << report.dump() << '\n';
  } else {
    out << (ok ? "all checks passed" : "some checks failed") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-lattice toolkit for graphs and signed bipartite graphs", "qlat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  Global gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--jobs", gl.jobs, "Worker threads for family verification")->check(CLI::PositiveNumber);

  std::string file, file2;
  bool flow = false, cut = false, k0 = false, normalize = false, oracle = false;
  bool resolutions = false, classes = false, homs = false;
  int family = 0;

  auto* build = app.add_subcommand("build-bipartite", "Signed bipartite graph of a graph and tree");
  build->add_option("file", file)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix of the q-flow, q-cut or K0 lattice");
  auto* gram_side = gram->add_option_group("side");
  gram_side->add_flag("--flow", flow);
  gram_side->add_flag("--cut", cut);
  gram_side->add_flag("--k0", k0);
  gram_side->require_option(1);
  gram->add_option("file", file)->required();

  auto* detc = app.add_subcommand("det", "Determinant of the q-flow or q-cut Gram matrix");
  auto* det_side = detc->add_option_group("side");
  det_side->add_flag("--flow", flow);
  det_side->add_flag("--cut", cut);
  det_side->require_option(1);
  detc->add_flag("--normalize", normalize, "Strip the unit factor");
  detc->add_option("file", file)->required();

  auto* mt = app.add_subcommand("matrix-tree", "q-Matrix-Tree report");
  mt->add_flag("--oracle", oracle, "Only the spanning-tree enumeration polynomial");
  mt->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two q-lattices");
  auto* iso_side = iso->add_option_group("side");
  iso_side->add_flag("--flow", flow);
  iso_side->add_flag("--cut", cut);
  iso_side->require_option(1);
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();

  auto* two = app.add_subcommand("two-iso", "Search for a cycle-preserving edge bijection");
  two->add_option("a", file)->required();
  two->add_option("b", file2)->required();

  auto* dualc = app.add_subcommand("dual", "Bipartite dual: parts and signs swapped");
  dualc->add_option("file", file)->required();

  auto* alg = app.add_subcommand("algebra", "K0 data of the bipartite algebra");
  auto* alg_what = alg->add_option_group("what");
  alg_what->add_flag("--resolutions", resolutions);
  alg_what->add_flag("--classes", classes);
  alg_what->add_flag("--homs", homs);
  alg_what->require_option(1);
  alg->add_option("file", file)->required();

  auto* ver = app.add_subcommand("verify", "Run every invariant check");
  ver->add_option("file", file);
  ver->add_option("--family", family, "Also check all bridgeless graphs with at most N edges")
      ->check(CLI::Range(1, 7));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (ver->parsed() && file.empty() && family == 0) {
    err << "verify: give a file, --family N, or both\n" << ver->help();
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(gl, file, out);
    if (gram->parsed()) return cmd_gram(gl, flow, k0, file, out);
    if (detc->parsed()) return cmd_det(gl, flow, normalize, file, out);
    if (mt->parsed()) return cmd_matrix_tree(gl, oracle, file, out);
    if (iso->parsed()) return cmd_iso(gl, flow, file, file2, out);
    if (two->parsed()) return cmd_two_iso(gl, file, file2, out);
    if (dualc->parsed()) return cmd_dual(gl, file, out);
    if (alg->parsed()) return cmd_algebra(gl, resolutions ? "resolutions" : classes ? "classes" : "homs", file, out);
    if (ver->parsed()) return cmd_verify(gl, file, family, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qlat::cli
