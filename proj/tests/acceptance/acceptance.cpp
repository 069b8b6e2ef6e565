// Acceptance suite: one line per criterion, exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gqcc/correspondence.hpp"
#include "gqcc/generators.hpp"
#include "gqcc/linalg.hpp"
#include "gqcc/operators.hpp"
#include "gqcc/spectrum.hpp"
#include "gqcc/tree.hpp"
#include "support/oracles.hpp"

namespace {

using namespace gqcc;
using Clock = std::chrono::steady_clock;

constexpr double kNumericTol = 1e-8;
constexpr double kAc1Limit = 1.0;
constexpr double kAc2Limit = 10.0;
constexpr double kAc6Limit = 30.0;
constexpr int kAlgebraicDegreeCap = 12;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  void fail(std::string why) {
    pass = false;
    failures.push_back(std::move(why));
  }
};

std::vector<Graph> load_corpus(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot open manifest " + manifest.string());
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(load_graph((manifest.parent_path() / line).string()));
  }
  return out;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

Outcome ac1(const std::vector<Graph>& corpus) {
  Outcome o;
  const std::map<std::string, std::pair<std::size_t, std::size_t>> pinned{
      {"c6", {2, 2}}, {"k4", {3, 2}}, {"k3_3", {4, 4}}, {"petersen", {6, 5}}};
  double worst = 0;
  std::size_t pinned_seen = 0;
  for (const auto& g : corpus) {
    const auto t0 = Clock::now();
    const auto rep = check_dimension_formulas(g);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (!rep.passed())
      o.fail(g.name() + ": observed (" + std::to_string(rep.dim_plus) + "," + std::to_string(rep.dim_minus) +
             ") predicted (" + std::to_string(rep.expected_plus) + "," + std::to_string(rep.expected_minus) + ")");
    if (dt >= kAc1Limit) o.fail(g.name() + ": " + fmt_seconds(dt) + " s");
    if (auto it = pinned.find(g.name()); it != pinned.end()) {
      ++pinned_seen;
      if (std::pair(rep.dim_plus, rep.dim_minus) != it->second) o.fail(g.name() + ": pinned value mismatch");
    }
  }
  if (pinned_seen != pinned.size()) o.fail("pinned graphs missing from corpus");
  o.detail = std::to_string(corpus.size()) + " graphs, C6 (2,2) K4 (3,2) K3,3 (4,4) Petersen (6,5) pinned, tol 0, max " +
             fmt_seconds(worst) + " s/graph (limit 1 s)";
  return o;
}

Outcome ac2_ac4(const std::vector<Graph>& corpus, Outcome& round_trip) {
  Outcome o;
  std::size_t exact = 0, numeric = 0, algebraic = 0, vacuous = 0, maps = 0;
  double worst = 0;
  for (const auto& g : corpus) {
    const auto t0 = Clock::now();
    const Spectrum s = edge_spectrum(g);
    std::vector<Polynomial> factors;
    for (const auto& c : s.clusters) {
      if (std::abs(c.value) < 1e-9 || (c.integer_value && (*c.integer_value == 1 || *c.integer_value == -1)))
        continue;
      CorrespondenceReport r;
      if (c.integer_value) {
        r = check_generic(g, Rational(*c.integer_value));
        ++exact;
        maps += *r.edge_dim;
        if (r.status != IsomorphismStatus::Verified || !r.passed())
          round_trip.fail(g.name() + " z=" + std::to_string(*c.integer_value));
      } else {
        r = check_generic_numeric(g, c.value, kNumericTol);
        ++numeric;
        if (!c.factor.is_zero() && c.factor.degree() <= kAlgebraicDegreeCap &&
            std::find(factors.begin(), factors.end(), c.factor) == factors.end())
          factors.push_back(c.factor);
      }
      if (!r.passed() || r.edge_dim.value_or(0) == 0) o.fail(g.name() + " z=" + r.parameter);
    }
    for (const auto& f : factors)
      for (const auto& ac : check_generic_algebraic(g, f)) {
        ++algebraic;
        if (!ac.report.passed()) o.fail(g.name() + " factor " + ac.factor.to_string());
      }
    // A non-eigenvalue: all three sides vanish.
    const auto off = check_generic(g, Rational(7, 3));
    ++vacuous;
    if (!off.passed() || off.edge_dim != 0u) o.fail(g.name() + " z=7/3");
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    if (dt >= kAc2Limit) o.fail(g.name() + ": " + fmt_seconds(dt) + " s");
  }
  o.detail = std::to_string(exact) + " rational eigenvalues exact, " + std::to_string(numeric) +
             " irrational/nonreal at tol 1e-8 plus " + std::to_string(algebraic) + " exact Q[x]/(f) checks, " +
             std::to_string(vacuous) + " off-spectrum; max " + fmt_seconds(worst) + " s/graph (limit 10 s)";
  round_trip.detail = std::to_string(exact) + " rational eigenvalues, " + std::to_string(maps) +
                      " basis vectors round-tripped both ways, exact";
  if (exact == 0) round_trip.fail("no rational eigenvalues off +-1 in corpus");
  return o;
}

Outcome ac3(const std::vector<Graph>& corpus) {
  Outcome o;
  std::size_t exceptional = 0, collapse = 0;
  for (const auto& g : corpus) {
    for (long z : {1L, -1L}) {
      const auto r = check_exceptional(g, Rational(z));
      ++exceptional;
      if (!r.passed() || r.transfer_dim != r.edge_dim) o.fail(g.name() + " z=" + std::to_string(z));
    }
    for (const auto& c : edge_spectrum(g).clusters) {
      if (std::abs(c.value) < 1e-9) continue;
      ++collapse;
      if (c.integer_value) {
        const Rational z(*c.integer_value);
        if (transfer_equalizer(g, z, 2).dimension() != transfer_equalizer(g, z, 1).dimension())
          o.fail(g.name() + " depth-2 z=" + std::to_string(*c.integer_value));
      } else {
        const auto d1 = transfer_equalizer_numeric(g, c.value, 1, kNumericTol).dimension();
        const auto d2 = transfer_equalizer_numeric(g, c.value, 2, kNumericTol).dimension();
        if (d1 != d2 || d1 == 0) o.fail(g.name() + " depth-2 numeric");
      }
    }
    for (const Rational& z : {Rational(3), Rational(-1, 2)}) {
      ++collapse;
      if (transfer_equalizer(g, z, 2).dimension() != transfer_equalizer(g, z, 1).dimension())
        o.fail(g.name() + " depth-2 off-spectrum");
    }
  }
  o.detail = std::to_string(exceptional) + " exact checks at z=+-1, " + std::to_string(collapse) +
             " depth-2 vs depth-1 comparisons (exact or tol 1e-8)";
  return o;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> p(-9, 9), q(1, 9);
  return Rational(p(rng), q(rng));
}

Outcome ac5(const std::vector<Graph>& corpus) {
  Outcome o;
  std::mt19937_64 rng(5);
  std::size_t checks = 0;
  for (const auto& g : corpus)
    for (int k = 0; k < 5; ++k) {
      Rational u = random_rational(rng);
      u.canonicalize();
      ++checks;
      if (zeta_determinant(g, u) != zeta_three_term(g, u)) o.fail(g.name() + " u=" + to_pq_string(u));
    }
  o.detail = std::to_string(checks) + " exact identities (5 per graph, rng seed 5), tol 0";
  return o;
}

Outcome ac6(const std::vector<Graph>& corpus) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t balls = 0, cases = 0, nodes = 0, edges = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& g = corpus[gi];
    for (VertexIndex base = 0; base < g.vertex_count(); ++base)
      for (std::size_t radius : {3u, 4u}) {
        const TreeBall ball = TreeBall::build(g, base, radius);
        ++balls;
        for (const Rational& z : {Rational(2), Rational(1, 2), Rational(-2)})
          for (std::uint64_t m = 0; m < 10; ++m) {
            const auto mu = random_rational_measure(ball, 1000 * gi + 10 * base + m + 1);
            const auto rep = factorization_check(ball, z, mu);
            const auto v = check_vertex_equation(ball, z, rep.vertex_direct);
            const auto e = check_edge_equation(ball, z, rep.edge_direct);
            ++cases;
            nodes += v.checked;
            edges += e.checked;
            if (!rep.passed() || !v.passed() || !e.passed())
              o.fail(g.name() + " base " + g.vertex_id(base) + " R=" + std::to_string(radius) + " z=" +
                     to_pq_string(z) + " measure " + std::to_string(m));
          }
      }
  }
  const double dt = seconds_since(t0);
  if (dt >= kAc6Limit) o.fail("runtime " + fmt_seconds(dt) + " s");
  o.detail = std::to_string(balls) + " balls, " + std::to_string(cases) + " (z, measure) cases, " +
             std::to_string(nodes) + " vertex and " + std::to_string(edges) + " edge equations, exact; " +
             fmt_seconds(dt) + " s total (limit 30 s)";
  return o;
}

/// Even cycle plus random chords joining opposite parities: always bipartite.
Graph random_bipartite_graph(std::size_t half, std::size_t chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 2 * half;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (std::size_t k = 0; k < chords; ++k) {
    const std::size_t a = 2 * (rng() % half), b = 2 * (rng() % half) + 1;
    edges.emplace_back(a, b);
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return Graph::from_edges(ids, edges, "bip");
}

Outcome ac7() {
  Outcome o;
  std::size_t metric = 0, cyclo = 0, bip = 0, nulls = 0;
  // Metric axioms, seeds 1..60.
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_admissible_graph(3 + seed % 10, 1 + seed % 5, seed);
    ++metric;
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> d(n);
    for (VertexIndex x = 0; x < n; ++x) d[x] = distances_from(g, x);
    bool ok = true;
    for (VertexIndex x = 0; x < n; ++x)
      for (VertexIndex y = 0; y < n; ++y) {
        ok = ok && (d[x][y] == 0) == (x == y) && d[x][y] == d[y][x] && d[x][y] == distance(g, x, y);
        ok = ok && d[x][y] == oracle::enumerated_distance(g, x, y);
        for (VertexIndex w = 0; w < n; ++w) ok = ok && d[x][w] <= d[x][y] + d[y][w];
      }
    if (!ok) o.fail("metric seed " + std::to_string(seed));
  }
  // Cyclomatic number against brute-force removal, seeds 101..160 (c <= 8).
  for (std::uint64_t seed = 101; seed <= 160; ++seed) {
    const Graph g = random_admissible_graph(3 + seed % 7, 1 + seed % 7, seed);
    if (cyclomatic_number(g) > 8) continue;
    ++cyclo;
    if (cyclomatic_number(g) != oracle::minimal_cycle_breaking_removals(g)) o.fail("cyclomatic seed " + std::to_string(seed));
  }
  // Bipartiteness against exhaustive 2-coloring, seeds 201..260 (<= 10 vertices).
  for (std::uint64_t seed = 201; seed <= 260; ++seed) {
    const Graph g = seed % 2 ? random_admissible_graph(3 + seed % 8, 1 + seed % 4, seed)
                             : random_bipartite_graph(2 + seed % 4, seed % 4, seed);
    ++bip;
    if (is_bipartite(g) != oracle::exhaustive_two_colorable(g)) o.fail("bipartite seed " + std::to_string(seed));
    if (seed % 2 == 0 && !is_bipartite(g)) o.fail("bipartite generator seed " + std::to_string(seed));
  }
  // Exact vs numeric nullspace dimension, seeds 301..360.
  for (std::uint64_t seed = 301; seed <= 360; ++seed) {
    const Graph g = random_admissible_graph(4 + seed % 7, 1 + seed % 5, seed);
    std::vector<long> candidates{1, -1, 2, -2};
    for (const auto& c : edge_spectrum(g).clusters)
      if (c.integer_value) candidates.push_back(*c.integer_value);
    const long z = candidates[seed % candidates.size()];
    if (z == 0) continue;
    ++nulls;
    const bool edge_ok = edge_equalizer(g, Rational(z)).dimension() ==
                         edge_equalizer_numeric(g, Complex(double(z)), kNumericTol).dimension();
    const bool vertex_ok = vertex_equalizer(g, Rational(z)).dimension() ==
                           vertex_equalizer_numeric(g, Complex(double(z)), kNumericTol).dimension();
    if (!edge_ok || !vertex_ok) o.fail("nullspace seed " + std::to_string(seed) + " z=" + std::to_string(z));
  }
  const std::size_t total = metric + cyclo + bip + nulls;
  if (total < 200) o.fail("only " + std::to_string(total) + " cases");
  o.detail = std::to_string(total) + " cases: metric " + std::to_string(metric) + " (seeds 1-60), cyclomatic " +
             std::to_string(cyclo) + " (seeds 101-160), bipartite " + std::to_string(bip) +
             " (seeds 201-260), nullspace " + std::to_string(nulls) + " (seeds 301-360, tol 1e-8)";
  return o;
}

bool report(const char* id, const char* title, const std::function<Outcome()>& run) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  std::printf("%s %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  for (const auto& f : o.failures) std::printf("    failure: %s\n", f.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path manifest =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path(GQCC_CORPUS_DIR) / "manifest.txt";
  std::vector<Graph> corpus;
  try {
    corpus = load_corpus(manifest);
  } catch (const std::exception& e) {
    std::printf("corpus load failed: %s\n", e.what());
    return 1;
  }
  bool ok = true;
  Outcome round_trip;
  ok &= report("AC1", "dimension formulas at z=+1,-1", [&] { return ac1(corpus); });
  ok &= report("AC2", "generic correspondence", [&] { return ac2_ac4(corpus, round_trip); });
  ok &= report("AC3", "exceptional correspondence and depth-2 collapse", [&] { return ac3(corpus); });
  ok &= report("AC4", "explicit isomorphism round-trip", [&] { return round_trip; });
  ok &= report("AC5", "zeta determinant identity", [&] { return ac5(corpus); });
  ok &= report("AC6", "tree Poisson transform checks", [&] { return ac6(corpus); });
  ok &= report("AC7", "randomized property suites", [] { return ac7(); });
  return ok ? 0 : 1;
}
