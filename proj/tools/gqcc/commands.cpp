#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gqcc/cli.hpp"
#include "gqcc/correspondence.hpp"
#include "gqcc/generators.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/matrix_json.hpp"
#include "gqcc/operators.hpp"
#include "gqcc/path_space.hpp"
#include "gqcc/spectrum.hpp"
#include "gqcc/tree.hpp"

namespace gqcc::cli {
namespace {

constexpr std::size_t kMatrixExportLimit = 400;

/// A spectral parameter as typed on the command line.
struct Scalar {
  std::string text;
  GaussianRational exact;
  Complex value;
  bool is_real() const { return exact.is_real(); }
};

Scalar parse_scalar(const std::string& text) {
  try {
    Scalar s{text, parse_gaussian(text), {}};
    s.value = to_complex(s.exact);
    s.text = to_string(s.exact);
    return s;
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid spectral parameter '" + text + "' (expected p/q or p/q,r/s)");
  }
}

std::string complex_text(Complex c) {
  const auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g,%.12g", clean(c.real()), clean(c.imag()));
  return buf;
}

std::string mode_name(bool numeric) { return numeric ? "numeric" : "exact"; }

Json vector_json(const Vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_pq_string(x));
  return out;
}

Json vector_json(const Vector<GaussianRational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json vector_json(const Vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(complex_text(x));
  return out;
}

Json graph_inputs(const Graph& g) { return {{"graph", g.name()}}; }

Graph open_graph(const std::string& path) {
  if (path.empty()) throw UsageError("--graph is required");
  return load_graph(path);
}

/// Turns an exception raised while handling `what` into a failure record.
template <class Fn>
void guarded(Report& report, const std::string& name, Json inputs, Fn&& fn) {
  try {
    fn();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    report.add({name, std::move(inputs), "exact", {{"error", e.kind()}, {"message", e.what()}}, "no error", false});
  } catch (const std::exception& e) {
    report.add({name, std::move(inputs), "exact", {{"error", "Error"}, {"message", e.what()}}, "no error", false});
  }
}

// ---------------------------------------------------------------- correspondence

void add_correspondence(Report& report, const std::string& prefix, const CorrespondenceReport& r) {
  Json observed;
  if (r.transfer_dim) observed["transfer"] = *r.transfer_dim;
  if (r.edge_dim) observed["edge"] = *r.edge_dim;
  if (r.vertex_dim) observed["vertex"] = *r.vertex_dim;
  observed["isomorphism"] = std::string(to_string(r.status));
  const Json inputs = {{"graph", r.graph_id}, {"z", r.parameter}};
  const std::string mode(to_string(r.mode));
  report.add({prefix, inputs, mode, observed, "all dimensions equal", r.passed()});
  for (const auto& a : r.assertions)
    report.add({prefix + ": " + a.name, inputs, mode, a.observed, a.expected, a.passed});
}

void correspondence_at(Report& report, const Graph& g, const Scalar& z, const RunConfig& cfg,
                       const std::string& prefix) {
  const bool exceptional = z.is_real() && (z.exact == GaussianRational(1) || z.exact == GaussianRational(-1));
  const std::string tag = prefix + (exceptional ? "exceptional z=" : "generic z=") + z.text;
  guarded(report, tag, {{"graph", g.name()}, {"z", z.text}}, [&] {
    if (cfg.numeric) {
      if (!exceptional) add_correspondence(report, tag, check_generic_numeric(g, z.value, cfg.tol));
      add_correspondence(report, prefix + "exceptional-pairing z=" + z.text,
                         check_exceptional_numeric(g, z.value, cfg.tol));
      return;
    }
    if (z.is_real()) {
      if (!exceptional) add_correspondence(report, tag, check_generic(g, z.exact.re));
      add_correspondence(report, prefix + (exceptional ? "exceptional" : "exceptional-pairing") + " z=" + z.text,
                         check_exceptional(g, z.exact.re));
    } else {
      add_correspondence(report, tag, check_generic(g, z.exact));
      add_correspondence(report, prefix + "exceptional-pairing z=" + z.text, check_exceptional(g, z.exact));
    }
  });
}

void correspondence_all_eigenvalues(Report& report, const Graph& g, const RunConfig& cfg,
                                    const std::string& prefix) {
  const Spectrum s = edge_spectrum(g);
  std::vector<Polynomial> factors;
  for (const auto& c : s.clusters) {
    if (c.integer_value) {
      if (*c.integer_value == 0) continue;
      correspondence_at(report, g, parse_scalar(std::to_string(*c.integer_value)), cfg, prefix);
      continue;
    }
    const std::string tag = prefix + "generic z~" + complex_text(c.value);
    guarded(report, tag, graph_inputs(g), [&] {
      add_correspondence(report, tag, check_generic_numeric(g, c.value, cfg.tol));
      add_correspondence(report, prefix + "exceptional-pairing z~" + complex_text(c.value),
                         check_exceptional_numeric(g, c.value, cfg.tol));
    });
    if (!cfg.numeric && !c.factor.is_zero() && c.factor.degree() <= cfg.algebraic_degree_cap &&
        std::find(factors.begin(), factors.end(), c.factor) == factors.end())
      factors.push_back(c.factor);
  }
  for (const auto& f : factors) {
    const std::string tag = prefix + "generic algebraic root of " + f.to_string();
    guarded(report, tag, graph_inputs(g), [&] {
      for (const auto& ac : check_generic_algebraic(g, f))
        add_correspondence(report, prefix + "generic algebraic root of " + ac.factor.to_string(), ac.report);
    });
  }
}

void dimension_formulas(Report& report, const Graph& g, const std::string& prefix) {
  const auto r = check_dimension_formulas(g);
  for (const auto& a : r.assertions)
    report.add({prefix + "dimension-formula: " + a.name,
                {{"graph", g.name()}, {"cyclomatic", r.cyclomatic}, {"bipartite", r.bipartite}},
                "exact",
                a.observed,
                a.expected,
                a.passed});
}

// ---------------------------------------------------------------- zeta

std::vector<Rational> zeta_arguments(const RunConfig& cfg, std::uint64_t seed) {
  std::vector<Rational> us;
  for (const auto& t : cfg.u) {
    try {
      us.push_back(parse_rational(t));
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid zeta argument '" + t + "'");
    }
  }
  if (us.empty()) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cfg.random_u; ++i) {
      const long p = static_cast<long>(rng() % 19) - 9;
      const long q = static_cast<long>(rng() % 9) + 1;
      Rational u(p, q);
      u.canonicalize();
      us.push_back(u);
    }
  }
  return us;
}

void zeta_records(Report& report, const Graph& g, const std::vector<Rational>& us, const std::string& prefix) {
  for (const auto& u : us) {
    const Rational lhs = zeta_determinant(g, u);
    const Rational rhs = zeta_three_term(g, u);
    report.add({prefix + "zeta u=" + to_pq_string(u),
                {{"graph", g.name()}, {"u", to_pq_string(u)}},
                "exact",
                to_pq_string(lhs),
                to_pq_string(rhs),
                lhs == rhs});
  }
}

void branching_diagnostic(Report& report, const Graph& g, const Rational& u, const std::string& prefix) {
  const auto d = branching_convention_diagnostic(g, u);
  report.add({prefix + "branching-convention",
              {{"graph", g.name()}, {"u", to_pq_string(u)}},
              "exact",
              {{"determinant", to_pq_string(d.determinant)},
               {"q=degree-1", to_pq_string(d.branching_reading)},
               {"q=degree", to_pq_string(d.neighbor_reading)},
               {"q=degree-1 matches", d.branching_matches},
               {"q=degree matches", d.neighbor_matches}},
              {{"q=degree-1 matches", true}},
              d.branching_matches});
}

// ---------------------------------------------------------------- tree

template <class T>
void tree_checks(Report& report, const TreeBall& ball, const T& z, const CylinderMeasure<T>& mu,
                 const std::vector<std::string>& checks, const Json& inputs, const std::string& prefix) {
  const auto wants = [&](const char* c) { return std::find(checks.begin(), checks.end(), c) != checks.end(); };
  const auto eq_json = [](const EquationCheck& e) { return Json{{"checked", e.checked}, {"failures", e.failures}}; };
  if (wants("vertex")) {
    const auto e = check_vertex_equation(ball, z, poisson_transform(ball, z, mu));
    report.add({prefix + "vertex-equation", inputs, "exact", eq_json(e), {{"failures", 0}}, e.passed()});
  }
  if (wants("edge")) {
    const auto e = check_edge_equation(ball, z, edge_poisson_transform(ball, z, mu));
    report.add({prefix + "edge-equation", inputs, "exact", eq_json(e), {{"failures", 0}}, e.passed()});
  }
  if (wants("factorization")) {
    const auto f = factorization_check(ball, z, mu);
    report.add({prefix + "factorization",
                inputs,
                "exact",
                {{"nodes", f.vertex_direct.size()},
                 {"edges", f.edge_direct.size()},
                 {"vertex_mismatches", f.vertex_mismatches},
                 {"edge_mismatches", f.edge_mismatches}},
                {{"vertex_mismatches", 0}, {"edge_mismatches", 0}},
                f.passed()});
  }
}

CylinderMeasure<Rational> parse_measure(const TreeBall& ball, const std::string& spec, std::uint64_t seed) {
  if (spec == "uniform") return uniform_measure(ball, Rational(0));
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  try {
    if (kind == "random") return random_rational_measure(ball, arg.empty() ? seed : std::stoull(arg));
    if (kind == "single" && !arg.empty()) {
      const std::size_t c = std::stoull(arg);
      if (c >= ball.cylinder_count())
        throw UsageError("cylinder " + arg + " out of range (ball has " + std::to_string(ball.cylinder_count()) +
                         " cylinders)");
      return single_cylinder_measure(ball, c, Rational(0));
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("invalid --measure '" + spec + "' (uniform | single:<cylinder> | random:<seed>)");
}

std::size_t predicted_ball_size(const Graph& g, VertexIndex base, std::size_t radius) {
  // Count by the branching recursion over (depth, last directed edge).
  std::vector<std::size_t> ending(g.directed_edge_count(), 0);
  for (EdgeId e : g.out_edges(base)) ending[e] = 1;
  std::size_t total = 1 + g.degree(base);
  for (std::size_t d = 2; d <= radius; ++d) {
    std::vector<std::size_t> next(ending.size(), 0);
    for (EdgeId e = 0; e < ending.size(); ++e)
      for (EdgeId s : g.successors(e)) next[s] += ending[e];
    ending = std::move(next);
    for (auto c : ending) total += c;
  }
  return total;
}

void tree_suite_for_graph(Report& report, const Graph& g, std::uint64_t seed, const std::string& prefix) {
  std::size_t balls = 0, cases = 0, failures = 0;
  for (VertexIndex base = 0; base < g.vertex_count(); ++base) {
    const TreeBall ball = TreeBall::build(g, base, 3);
    ++balls;
    for (const Rational& z : {Rational(2), Rational(1, 2), Rational(-2)}) {
      const auto mu = random_rational_measure(ball, seed + base);
      const auto f = factorization_check(ball, z, mu);
      ++cases;
      if (!f.passed() || !check_vertex_equation(ball, z, f.vertex_direct).passed() ||
          !check_edge_equation(ball, z, f.edge_direct).passed())
        ++failures;
    }
  }
  report.add({prefix + "tree-poisson",
              {{"graph", g.name()}, {"radius", 3}, {"z", {"2/1", "1/2", "-2/1"}}, {"measure_seed", seed}},
              "exact",
              {{"balls", balls}, {"cases", cases}, {"failures", failures}},
              {{"failures", 0}},
              failures == 0});
}

// ---------------------------------------------------------------- subcommands

void cmd_validate(Report& report, const RunConfig& cfg) {
  if (cfg.graph.empty()) throw UsageError("--graph is required");
  const Json inputs = {{"graph", cfg.graph}};
  guarded(report, "validate", inputs, [&] {
    const Graph g = load_graph(cfg.graph);
    report.add({"validate", inputs, "exact", "valid", "valid", true});
    std::size_t min_degree = g.degree(0), degree_sum = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      min_degree = std::min(min_degree, g.degree(v));
      degree_sum += g.degree(v);
    }
    report.add({"degree-sum", inputs, "exact", degree_sum, g.directed_edge_count(),
                degree_sum == g.directed_edge_count()});
    report.add({"invariants",
                inputs,
                "exact",
                {{"vertices", g.vertex_count()},
                 {"undirected_edges", g.undirected_edge_count()},
                 {"directed_edges", g.directed_edge_count()},
                 {"min_degree", min_degree},
                 {"cyclomatic_number", cyclomatic_number(g)},
                 {"bipartite", is_bipartite(g)}},
                {{"min_degree", ">= 2"}},
                min_degree >= 2});
  });
}

void cmd_spectrum(Report& report, const RunConfig& cfg) {
  const Graph g = open_graph(cfg.graph);
  if (cfg.vertex && cfg.z.empty()) throw UsageError("--vertex needs --z");
  if (cfg.z.size() > 1) throw UsageError("spectrum takes a single --z");
  if (!cfg.z.empty()) {
    const Scalar z = parse_scalar(cfg.z.front());
    const std::string op = cfg.vertex ? "vertex-equalizer" : "edge-equalizer";
    const Json inputs = {{"graph", g.name()}, {"z", z.text}};
    guarded(report, op, inputs, [&] {
      if (cfg.numeric) {
        const auto b = cfg.vertex ? vertex_equalizer_numeric(g, z.value, cfg.tol)
                                  : edge_equalizer_numeric(g, z.value, cfg.tol);
        Json basis = Json::array();
        for (const auto& v : b.vectors) basis.push_back(vector_json(v));
        report.add({op, inputs, "numeric", {{"dimension", b.dimension()}, {"basis", basis}}, nullptr, true});
        return;
      }
      std::size_t dim = 0;
      Json basis = Json::array();
      if (z.is_real()) {
        const auto b = cfg.vertex ? vertex_equalizer(g, z.exact.re) : edge_equalizer(g, z.exact.re);
        for (const auto& v : b.vectors) basis.push_back(vector_json(v));
        dim = b.dimension();
      } else {
        const auto b = cfg.vertex ? vertex_equalizer(g, z.exact) : edge_equalizer(g, z.exact);
        for (const auto& v : b.vectors) basis.push_back(vector_json(v));
        dim = b.dimension();
      }
      report.add({op, inputs, "exact", {{"dimension", dim}, {"basis", basis}}, nullptr, true});
      const auto numeric = cfg.vertex ? vertex_equalizer_numeric(g, z.value, cfg.tol)
                                      : edge_equalizer_numeric(g, z.value, cfg.tol);
      report.add({op + " exact/numeric agreement", inputs, "exact+numeric", numeric.dimension(), dim,
                  numeric.dimension() == dim});
    });
    return;
  }
  const Json inputs = graph_inputs(g);
  guarded(report, "edge-spectrum", inputs, [&] {
    std::vector<Complex> values;
    if (cfg.numeric) {
      values = eigenvalues_numeric(edge_laplacian_matrix(g));
      std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      Json list = Json::array();
      for (auto v : values) list.push_back(complex_text(v));
      report.add({"edge-spectrum", inputs, "numeric", {{"size", values.size()}, {"method", "numeric-eigen"}, {"eigenvalues", list}},
                  {{"size", g.directed_edge_count()}}, values.size() == g.directed_edge_count()});
    } else {
      const Spectrum s = edge_spectrum(g);
      values = s.multiset();
      Json clusters = Json::array();
      for (const auto& c : s.clusters) {
        Json j{{"value", complex_text(c.value)}, {"multiplicity", c.multiplicity}};
        if (c.integer_value) j["exact"] = to_pq_string(Rational(*c.integer_value));
        if (!c.factor.is_zero()) j["factor"] = c.factor.to_string();
        clusters.push_back(std::move(j));
      }
      Json observed{{"size", s.size()}, {"method", s.method}};
      if (!s.characteristic.is_zero()) observed["characteristic"] = s.characteristic.to_string();
      observed["eigenvalues"] = clusters;
      report.add({"edge-spectrum", inputs, "exact", observed, {{"size", g.directed_edge_count()}},
                  s.size() == g.directed_edge_count()});
    }
    const double scale = std::max<double>(1.0, static_cast<double>(values.size()));
    Complex sum = 0;
    std::size_t unmatched = 0;
    for (auto v : values) {
      sum += v;
      const auto near = [&](Complex a, Complex b) { return std::abs(a - b) <= 1e-6 * scale; };
      const auto count = [&](Complex t) {
        return std::count_if(values.begin(), values.end(), [&](Complex x) { return near(x, t); });
      };
      if (count(v) != count(std::conj(v))) ++unmatched;
    }
    report.add({"conjugation-symmetry", inputs, mode_name(cfg.numeric), unmatched, 0, unmatched == 0});
    report.add({"trace", inputs, mode_name(cfg.numeric), complex_text(sum), "0,0",
                std::abs(sum) <= cfg.tol * scale * 10});
  });
}

void cmd_paths(Report& report, const RunConfig& cfg) {
  const Graph g = open_graph(cfg.graph);
  if (cfg.depth == 0) throw UsageError("--depth must be positive");
  const Json inputs = {{"graph", g.name()}, {"depth", cfg.depth}};
  guarded(report, "paths", inputs, [&] {
    if (cfg.depth > cfg.depth_cap)
      throw DepthCapExceeded("depth " + std::to_string(cfg.depth) + " exceeds cap " + std::to_string(cfg.depth_cap));
    // Independent count: 1^T B^(n-1) 1 with the edge Laplacian B.
    const ExactMatrix b = edge_laplacian_matrix(g);
    Vector<Rational> ones(g.directed_edge_count(), Rational(1));
    for (std::size_t k = 1; k < cfg.depth; ++k) ones = multiply(b, ones);
    Rational expected = 0;
    for (const auto& x : ones) expected += x;
    const std::size_t count = count_paths(g, cfg.depth);
    report.add({"path-count", inputs, "exact", std::to_string(count), expected.get_num().get_str(),
                expected == Rational(static_cast<long>(count))});
    if (cfg.count_only) return;

    const DepthSpace space = enumerate_paths(g, cfg.depth, cfg.depth_cap);
    Json paths = Json::array();
    for (const auto& p : space.basis()) {
      std::string s = g.vertex_id(g.edge(p.front()).initial);
      for (EdgeId e : p) s += ">" + g.vertex_id(g.edge(e).terminal);
      paths.push_back(std::move(s));
    }
    report.add({"paths", inputs, "exact", paths, nullptr, true});
    if (space.dimension() > kMatrixExportLimit) {
      report.add({"transfer-matrix", inputs, "exact",
                  "omitted: dimension " + std::to_string(space.dimension()) + " exceeds " +
                      std::to_string(kMatrixExportLimit),
                  nullptr, true});
      return;
    }
    const ExactMatrix l = transfer_matrix(g, cfg.depth, cfg.depth_cap);
    report.add({"transfer-matrix", inputs, "exact", Json::parse(to_matrix_json(l)), nullptr, true});
    if (cfg.depth == 1) {
      report.add({"transfer-is-edge-laplacian-transpose", inputs, "exact", l == transpose(b), true, l == transpose(b)});
    } else {
      const std::size_t rank = rank_bareiss(l);
      const std::size_t image = count_paths(g, cfg.depth - 1);
      report.add({"transfer-rank", inputs, "exact", rank, image, rank == image});
    }
  });
}

void cmd_tree(Report& report, const RunConfig& cfg) {
  const Graph g = open_graph(cfg.graph);
  if (cfg.numeric) throw UsageError("tree checks run in exact arithmetic; drop --numeric");
  if (cfg.z.size() != 1) throw UsageError("tree needs exactly one --z");
  if (cfg.radius < 2) throw UsageError("--radius must be at least 2");
  if (cfg.base.empty()) throw UsageError("--base is required");
  VertexIndex base = 0;
  try {
    base = g.index_of(cfg.base);
  } catch (const UnknownVertex&) {
    throw UsageError("unknown base vertex '" + cfg.base + "'");
  }
  const Scalar z = parse_scalar(cfg.z.front());
  std::vector<std::string> checks = cfg.checks;
  if (checks.empty()) checks = {"vertex", "edge", "factorization"};
  for (const auto& c : checks)
    if (c != "vertex" && c != "edge" && c != "factorization")
      throw UsageError("invalid --check '" + c + "' (vertex | edge | factorization)");

  const Json inputs = {{"graph", g.name()}, {"base", cfg.base}, {"radius", cfg.radius}, {"z", z.text},
                       {"measure", cfg.measure}};
  guarded(report, "tree", inputs, [&] {
    const TreeBall ball = TreeBall::build(g, base, cfg.radius, cfg.ball_cap);
    const std::size_t predicted = predicted_ball_size(g, base, cfg.radius);
    report.add({"tree-ball", inputs, "exact", {{"nodes", ball.node_count()}, {"cylinders", ball.cylinder_count()}},
                {{"nodes", predicted}}, ball.node_count() == predicted});
    const auto mu = parse_measure(ball, cfg.measure, cfg.seed);
    Rational total = 0;
    for (const auto& m : mu.mass) total += m;
    if (z.is_real()) {
      const Rational& zr = z.exact.re;
      const Rational at_base = poisson_transform_at(ball, zr, mu, 0);
      report.add({"poisson-at-base", inputs, "exact", to_pq_string(at_base), to_pq_string(total), at_base == total});
      tree_checks(report, ball, zr, mu, checks, inputs, "");
    } else {
      CylinderMeasure<GaussianRational> gm;
      for (const auto& m : mu.mass) gm.mass.emplace_back(m);
      const GaussianRational at_base = poisson_transform_at(ball, z.exact, gm, 0);
      report.add({"poisson-at-base", inputs, "exact", to_string(at_base), to_pq_string(total),
                  at_base == GaussianRational(total)});
      tree_checks(report, ball, z.exact, gm, checks, inputs, "");
    }
  });
}

void cmd_qcc(Report& report, const RunConfig& cfg) {
  const Graph g = open_graph(cfg.graph);
  if (cfg.z.empty() && !cfg.all_eigenvalues && !cfg.formulas)
    throw UsageError("qcc-check needs --z, --all-eigenvalues or --formulas");
  std::vector<Scalar> zs;
  for (const auto& t : cfg.z) zs.push_back(parse_scalar(t));
  for (const auto& z : zs) correspondence_at(report, g, z, cfg, "");
  if (cfg.all_eigenvalues)
    guarded(report, "all-eigenvalues", graph_inputs(g), [&] { correspondence_all_eigenvalues(report, g, cfg, ""); });
  if (cfg.formulas) dimension_formulas(report, g, "");
}

void cmd_zeta(Report& report, const RunConfig& cfg) {
  const Graph g = open_graph(cfg.graph);
  const auto us = zeta_arguments(cfg, cfg.seed);
  zeta_records(report, g, us, "");
  branching_diagnostic(report, g, us.empty() ? Rational(1, 3) : us.front(), "");
}

void cmd_corpus(Report& report, const RunConfig& cfg) {
  if (cfg.manifest.empty()) throw UsageError("--manifest is required");
  std::ifstream in(cfg.manifest);
  if (!in) throw UsageError("cannot open manifest '" + cfg.manifest + "'");
  const auto dir = std::filesystem::path(cfg.manifest).parent_path();
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string entry = line.substr(first, last - first + 1);
    const std::string path = (dir / entry).string();
    const std::uint64_t seed = cfg.seed + 1000 * index++;
    const std::string prefix = entry + "/";
    std::optional<Graph> g;
    guarded(report, prefix + "validate", {{"graph", entry}}, [&] { g = load_graph(path); });
    if (!g) continue;
    report.add({prefix + "validate", {{"graph", entry}}, "exact", "valid", "valid", true});
    guarded(report, prefix + "suite", graph_inputs(*g), [&] {
      dimension_formulas(report, *g, prefix);
      correspondence_at(report, *g, parse_scalar("1"), cfg, prefix);
      correspondence_at(report, *g, parse_scalar("-1"), cfg, prefix);
      correspondence_all_eigenvalues(report, *g, cfg, prefix);
      zeta_records(report, *g, zeta_arguments(cfg, seed), prefix);
      branching_diagnostic(report, *g, Rational(1, 3), prefix);
      tree_suite_for_graph(report, *g, seed, prefix);
    });
  }
}

// ---------------------------------------------------------------- generate

struct CorpusEntry {
  std::string file;
  std::string description;
  Graph graph;
};

std::string with_header(const std::string& description, const Graph& g) {
  return "# " + description + "\n" + to_edge_list(g);
}

std::vector<CorpusEntry> bundled_corpus() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 3; n <= 8; ++n)
    out.push_back({"c" + std::to_string(n) + ".txt", "cycle C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"k4.txt", "complete graph K4", complete_graph(4)});
  out.push_back({"k5.txt", "complete graph K5", complete_graph(5)});
  out.push_back({"k3_3.txt", "complete bipartite graph K3,3", complete_bipartite_graph(3, 3)});
  out.push_back({"petersen.txt", "Petersen graph", petersen_graph()});
  struct Params {
    std::size_t n, c;
    std::uint64_t seed;
  };
  const Params random[] = {{8, 3, 101}, {9, 4, 202}, {10, 5, 303}, {11, 4, 404}, {12, 6, 505}};
  for (std::size_t i = 0; i < std::size(random); ++i) {
    const auto& p = random[i];
    out.push_back({"random_" + std::to_string(i + 1) + ".txt",
                   "random admissible graph: n=" + std::to_string(p.n) + " target_cyclomatic=" + std::to_string(p.c) +
                       " seed=" + std::to_string(p.seed) + " (gqcc generate --family random)",
                   random_admissible_graph(p.n, p.c, p.seed)});
  }
  return out;
}

RunResult cmd_generate(const RunConfig& cfg) {
  RunResult result;
  if (!cfg.corpus_dir.empty()) {
    std::filesystem::create_directories(cfg.corpus_dir);
    std::ostringstream manifest, listing;
    manifest << "# bundled corpus: one edge-list file per line, relative to this manifest\n";
    for (const auto& e : bundled_corpus()) {
      std::ofstream(std::filesystem::path(cfg.corpus_dir) / e.file) << with_header(e.description, e.graph);
      manifest << e.file << "\n";
      listing << e.file << "\n";
    }
    std::ofstream(std::filesystem::path(cfg.corpus_dir) / "manifest.txt") << manifest.str();
    result.text = listing.str();
    return result;
  }
  const auto need_n = [&](std::size_t min) {
    if (cfg.n < min) throw UsageError("--n must be at least " + std::to_string(min) + " for " + cfg.family);
  };
  std::optional<Graph> g;
  std::string description;
  if (cfg.family == "cycle") {
    need_n(3);
    g = cycle_graph(cfg.n);
    description = "cycle C" + std::to_string(cfg.n);
  } else if (cfg.family == "complete") {
    need_n(3);
    g = complete_graph(cfg.n);
    description = "complete graph K" + std::to_string(cfg.n);
  } else if (cfg.family == "bipartite") {
    need_n(2);
    if (cfg.m < 2) throw UsageError("--m must be at least 2 for bipartite");
    g = complete_bipartite_graph(cfg.n, cfg.m);
    description = "complete bipartite graph K" + std::to_string(cfg.n) + "," + std::to_string(cfg.m);
  } else if (cfg.family == "petersen") {
    g = petersen_graph();
    description = "Petersen graph";
  } else if (cfg.family == "random") {
    need_n(3);
    g = random_admissible_graph(cfg.n, cfg.cyclomatic, cfg.seed);
    description = "random admissible graph: n=" + std::to_string(cfg.n) +
                  " target_cyclomatic=" + std::to_string(cfg.cyclomatic) + " seed=" + std::to_string(cfg.seed);
  } else {
    throw UsageError("generate needs --family cycle|complete|bipartite|petersen|random or --corpus <dir>");
  }
  result.text = with_header(description, *g);
  return result;
}

}  // namespace

Json RunConfig::to_json() const {
  Json j;
  j["subcommand"] = subcommand;
  j["graph"] = graph;
  j["manifest"] = manifest;
  j["z"] = z;
  j["u"] = u;
  j["mode"] = mode_name(numeric);
  char tol_text[32];
  std::snprintf(tol_text, sizeof tol_text, "%g", tol);
  j["tol"] = tol_text;
  j["seed"] = seed;
  j["vertex"] = vertex;
  j["depth"] = depth;
  j["depth_cap"] = depth_cap;
  j["count_only"] = count_only;
  j["base"] = base;
  j["radius"] = radius;
  j["ball_cap"] = ball_cap;
  j["measure"] = measure;
  j["checks"] = checks;
  j["all_eigenvalues"] = all_eigenvalues;
  j["formulas"] = formulas;
  j["algebraic_degree_cap"] = algebraic_degree_cap;
  j["random_u"] = random_u;
  return j;
}

RunResult run(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (cfg.subcommand == "generate") return cmd_generate(cfg);
  Report report(cfg.to_json());
  if (cfg.subcommand == "validate") {
    cmd_validate(report, cfg);
  } else {
    // A graph that cannot be loaded is a computation failure, reported as a record.
    try {
      if (cfg.subcommand == "spectrum") cmd_spectrum(report, cfg);
      else if (cfg.subcommand == "paths") cmd_paths(report, cfg);
      else if (cfg.subcommand == "tree") cmd_tree(report, cfg);
      else if (cfg.subcommand == "qcc-check") cmd_qcc(report, cfg);
      else if (cfg.subcommand == "zeta") cmd_zeta(report, cfg);
      else if (cfg.subcommand == "corpus") cmd_corpus(report, cfg);
      else throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      report.add({"load-graph", {{"graph", cfg.graph}}, "exact", {{"error", e.kind()}, {"message", e.what()}},
                  "valid graph", false});
    }
  }
  RunResult result;
  result.exit_code = report.all_passed() ? kExitPass : kExitFail;
  result.report = std::move(report);
  return result;
}

}  // namespace gqcc::cli
