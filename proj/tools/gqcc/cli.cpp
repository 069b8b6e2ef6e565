#include "gqcc/cli.hpp"

#include <fstream>

#include "CLI11.hpp"

namespace gqcc::cli {
namespace {

void add_graph(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph", cfg.graph, "Edge-list file")->required();
}

void add_z(CLI::App* sub, RunConfig& cfg, const std::string& help) {
  sub->add_option("--z", cfg.z, help)->allow_extra_args(false);
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum-classical correspondence checks on finite graphs", "gqcc"};
  app.require_subcommand(1);

  bool exact = false;
  auto* exact_flag = app.add_flag("--exact", exact, "Exact rational arithmetic (default)");
  auto* numeric_flag = app.add_flag("--numeric", cfg.numeric, "Floating-point arithmetic with SVD rank decisions");
  exact_flag->excludes(numeric_flag);
  app.add_option("--tol", cfg.tol, "Relative singular-value cutoff")->capture_default_str();
  app.add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
  app.add_option("--csv", cfg.csv, "Also write a CSV summary of the records");
  app.add_option("--seed", cfg.seed, "Seed for random measures, zeta arguments and random graphs")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Parse and validate a graph");
  add_graph(validate, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "Edge-Laplacian spectrum or an equalizer basis");
  add_graph(spectrum, cfg);
  auto* edge_flag = spectrum->add_flag("--edge", "Edge Laplacian (default)");
  spectrum->add_flag("--vertex", cfg.vertex, "Vertex equalizer {Delta_X = delta_z}; needs --z")->excludes(edge_flag);
  add_z(spectrum, cfg, "Spectral parameter p/q or p/q,r/s");

  auto* paths = app.add_subcommand("paths", "Non-backtracking paths and the transfer matrix");
  add_graph(paths, cfg);
  paths->add_option("--depth", cfg.depth, "Path length")->required();
  paths->add_option("--depth-cap", cfg.depth_cap, "Largest admissible depth")->capture_default_str();
  paths->add_flag("--count-only", cfg.count_only, "Only count the paths");

  auto* tree = app.add_subcommand("tree", "Poisson-transform checks on a covering-tree ball");
  add_graph(tree, cfg);
  tree->add_option("--base", cfg.base, "Base vertex")->required();
  tree->add_option("--radius", cfg.radius, "Ball radius R >= 2")->capture_default_str();
  tree->add_option("--ball-cap", cfg.ball_cap, "Largest admissible node count")->capture_default_str();
  add_z(tree, cfg, "Spectral parameter p/q or p/q,r/s");
  tree->add_option("--measure", cfg.measure, "uniform | single:<cylinder> | random:<seed>")->capture_default_str();
  tree->add_option("--check", cfg.checks, "vertex | edge | factorization (repeatable; default all)");

  auto* qcc = app.add_subcommand("qcc-check", "Correspondence and dimension-formula checks");
  add_graph(qcc, cfg);
  add_z(qcc, cfg, "Spectral parameter p/q or p/q,r/s (repeatable)");
  qcc->add_flag("--all-eigenvalues", cfg.all_eigenvalues, "Check at every edge-Laplacian eigenvalue");
  qcc->add_flag("--formulas", cfg.formulas, "Check the dimension formulas at z = 1 and z = -1");
  qcc->add_option("--algebraic-degree-cap", cfg.algebraic_degree_cap,
                  "Largest factor degree checked exactly in Q[x]/(f)")
      ->capture_default_str();

  auto* zeta = app.add_subcommand("zeta", "Zeta determinant identity and the branching diagnostic");
  add_graph(zeta, cfg);
  zeta->add_option("--u", cfg.u, "Rational arguments (repeatable); default: --random seeded values");
  zeta->add_option("--random", cfg.random_u, "Number of seeded random arguments")->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "Run the invariant suite on every graph of a manifest");
  corpus->add_option("--manifest", cfg.manifest, "File listing edge-list paths")->required();

  auto* generate = app.add_subcommand("generate", "Write graphs in edge-list format");
  generate->add_option("--family", cfg.family, "cycle | complete | bipartite | petersen | random");
  generate->add_option("--n", cfg.n, "Vertex count (first side for bipartite)");
  generate->add_option("--m", cfg.m, "Second side for bipartite");
  generate->add_option("--cyclomatic", cfg.cyclomatic, "Target cyclomatic number for random")->capture_default_str();
  generate->add_option("--corpus", cfg.corpus_dir, "Write the bundled corpus and manifest into this directory");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  RunResult result;
  try {
    result = run(cfg);
  } catch (const UsageError& e) {
    err << "gqcc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gqcc: " << e.what() << "\n";
    return kExitFail;
  }

  std::string body = result.text;
  if (result.report) body = result.report->to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    out << body;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f || !(f << body)) {
      err << "gqcc: cannot write '" << cfg.out << "'\n";
      return kExitFail;
    }
  }
  if (!cfg.csv.empty() && result.report) {
    std::ofstream f(cfg.csv, std::ios::binary);
    result.report->write_csv(f);
    if (!f) {
      err << "gqcc: cannot write '" << cfg.csv << "'\n";
      return kExitFail;
    }
  }
  if (result.report && result.exit_code != kExitPass)
    err << "gqcc: " << result.report->failed() << " of " << result.report->records().size() << " checks failed\n";
  return result.exit_code;
}

}  // namespace gqcc::cli
