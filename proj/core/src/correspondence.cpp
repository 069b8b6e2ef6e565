#include "gqcc/correspondence.hpp"

#include <cmath>
#include <queue>

namespace gqcc {

std::string_view to_string(IsomorphismStatus s) noexcept {
  switch (s) {
    case IsomorphismStatus::Verified: return "verified";
    case IsomorphismStatus::DimensionOnly: return "dimension-only";
    case IsomorphismStatus::Failed: return "failed";
  }
  return "unknown";
}

bool CorrespondenceReport::passed() const {
  if (status == IsomorphismStatus::Failed) return false;
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return !assertions.empty();
}

void CorrespondenceReport::expect(std::string name, bool ok, std::string observed, std::string expected) {
  assertions.push_back({std::move(name), ok, std::move(observed), std::move(expected)});
}

namespace {

std::string dim_text(std::size_t d) { return std::to_string(d); }

template <class T>
bool in_kernel(const Matrix<T>& m, const Vector<T>& v) {
  return all_zero(multiply(m, v));
}

}  // namespace

template <class T>
CorrespondenceReport check_generic(const Graph& g, const T& z, ArithmeticMode mode) {
  detail::require_generic_parameter(z);
  CorrespondenceReport rep;
  rep.graph_id = g.name();
  rep.parameter = FieldTraits<T>::to_text(z);
  rep.mode = mode;

  const auto transfer = transfer_equalizer(g, z, 1, mode);
  const auto edge = edge_equalizer(g, z, mode);
  const auto vertex = vertex_equalizer(g, z, mode);
  rep.transfer_dim = transfer.dimension();
  rep.edge_dim = edge.dimension();
  rep.vertex_dim = vertex.dimension();
  rep.expect("dim{L=z} == dim{Delta_E=z}", transfer.dimension() == edge.dimension(), dim_text(transfer.dimension()),
             dim_text(edge.dimension()));
  rep.expect("dim{Delta_E=z} == dim{Delta_X=delta_z}", edge.dimension() == vertex.dimension(),
             dim_text(edge.dimension()), dim_text(vertex.dimension()));

  const Matrix<T> edge_op = shifted(convert(edge_laplacian_matrix(g), z), z);
  const Matrix<T> transfer_op = shifted(convert(transfer_matrix(g, 1), z), z);
  const Matrix<T> vertex_op = vertex_equalizer_matrix(g, z);

  std::size_t failures = 0;
  std::vector<Vector<T>> images;
  for (const auto& f : edge.vectors) {
    auto s = map_edge_to_vertex(g, z, f);
    if (!in_kernel(vertex_op, s)) ++failures;
    if (!(map_vertex_to_edge(g, z, s) == f)) ++failures;
    if (!in_kernel(transfer_op, map_edge_to_transfer(g, f))) ++failures;
    images.push_back(std::move(s));
  }
  rep.expect("edge->vertex image in {Delta_X=delta_z}, vertex->edge inverts it", failures == 0,
             std::to_string(failures) + " failures", "0 failures");

  failures = 0;
  for (const auto& gv : vertex.vectors) {
    auto f = map_vertex_to_edge(g, z, gv);
    if (!in_kernel(edge_op, f)) ++failures;
    if (!(map_edge_to_vertex(g, z, f) == gv)) ++failures;
  }
  rep.expect("vertex->edge image in {Delta_E=z}, edge->vertex inverts it", failures == 0,
             std::to_string(failures) + " failures", "0 failures");

  const bool injective = linearly_independent(images);
  rep.expect("edge->vertex map injective on basis", injective, injective ? "independent" : "dependent",
             "independent");

  rep.status = IsomorphismStatus::Verified;
  for (const auto& a : rep.assertions)
    if (!a.passed) rep.status = IsomorphismStatus::Failed;
  return rep;
}

template CorrespondenceReport check_generic<Rational>(const Graph&, const Rational&, ArithmeticMode);
template CorrespondenceReport check_generic<GaussianRational>(const Graph&, const GaussianRational&, ArithmeticMode);
template CorrespondenceReport check_generic<AlgebraicNumber>(const Graph&, const AlgebraicNumber&, ArithmeticMode);

namespace {

double frobenius(const Matrix<Complex>& m) {
  double s = 0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

double vector_distance(const Vector<Complex>& a, const Vector<Complex>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

Matrix<Complex> to_complex_matrix(const ExactMatrix& m) { return convert(m, Complex{}); }

std::string residual_text(double r) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "max residual %.3e", r);
  return buf;
}

}  // namespace

CorrespondenceReport check_generic_numeric(const Graph& g, Complex z, double tol) {
  detail::require_generic_parameter(z);
  CorrespondenceReport rep;
  rep.graph_id = g.name();
  rep.parameter = FieldTraits<Complex>::to_text(z);
  rep.mode = ArithmeticMode::Numeric;

  const auto transfer = transfer_equalizer_numeric(g, z, 1, tol);
  const auto edge = edge_equalizer_numeric(g, z, tol);
  const auto vertex = vertex_equalizer_numeric(g, z, tol);
  rep.transfer_dim = transfer.dimension();
  rep.edge_dim = edge.dimension();
  rep.vertex_dim = vertex.dimension();
  rep.expect("dim{L=z} == dim{Delta_E=z}", transfer.dimension() == edge.dimension(), dim_text(transfer.dimension()),
             dim_text(edge.dimension()));
  rep.expect("dim{Delta_E=z} == dim{Delta_X=delta_z}", edge.dimension() == vertex.dimension(),
             dim_text(edge.dimension()), dim_text(vertex.dimension()));

  const Matrix<Complex> edge_op = shifted(to_complex_matrix(edge_laplacian_matrix(g)), z);
  const Matrix<Complex> transfer_op = shifted(to_complex_matrix(transfer_matrix(g, 1)), z);
  const Matrix<Complex> vertex_op = vertex_equalizer_matrix(g, z);
  const double bound = tol * (1.0 + std::max({frobenius(edge_op), frobenius(vertex_op)}));

  double worst = 0.0;
  for (const auto& f : edge.vectors) {
    const auto s = map_edge_to_vertex(g, z, f);
    worst = std::max(worst, relative_residual(vertex_op, s));
    worst = std::max(worst, vector_distance(map_vertex_to_edge(g, z, s), f) / norm2(f));
    worst = std::max(worst, relative_residual(transfer_op, map_edge_to_transfer(g, f)));
  }
  for (const auto& gv : vertex.vectors) {
    const auto f = map_vertex_to_edge(g, z, gv);
    worst = std::max(worst, relative_residual(edge_op, f));
    worst = std::max(worst, vector_distance(map_edge_to_vertex(g, z, f), gv) / norm2(gv));
  }
  char expected[48];
  std::snprintf(expected, sizeof expected, "<= %.3e", bound);
  rep.expect("explicit maps and compositions within tolerance", worst <= bound, residual_text(worst), expected);
  rep.status = worst <= bound ? IsomorphismStatus::Verified : IsomorphismStatus::Failed;
  if (transfer.dimension() != edge.dimension() || edge.dimension() != vertex.dimension())
    rep.status = IsomorphismStatus::Failed;
  return rep;
}

template <class T>
CorrespondenceReport check_exceptional(const Graph& g, const T& z, ArithmeticMode mode) {
  if (is_zero(z)) throw ZeroParameter("spectral parameter must be nonzero");
  CorrespondenceReport rep;
  rep.graph_id = g.name();
  rep.parameter = FieldTraits<T>::to_text(z);
  rep.mode = mode;

  const ExactMatrix l1 = transfer_matrix(g, 1);
  const ExactMatrix b = edge_laplacian_matrix(g);
  const bool transposed = l1 == transpose(b);
  rep.expect("transfer matrix at depth 1 equals the transposed edge Laplacian", transposed,
             transposed ? "equal" : "different", "equal");

  const auto transfer = transfer_equalizer(g, z, 1, mode);
  const auto edge = edge_equalizer(g, z, mode);
  rep.transfer_dim = transfer.dimension();
  rep.edge_dim = edge.dimension();
  rep.expect("dim{L=z} == dim{Delta_E=z}", transfer.dimension() == edge.dimension(), dim_text(transfer.dimension()),
             dim_text(edge.dimension()));

  const Matrix<T> transfer_op = shifted(convert(l1, z), z);
  std::vector<Vector<T>> images;
  std::size_t failures = 0;
  for (const auto& f : edge.vectors) {
    auto h = map_edge_to_transfer(g, f);
    if (!in_kernel(transfer_op, h)) ++failures;
    images.push_back(std::move(h));
  }
  const bool independent = linearly_independent(images);
  rep.expect("reversal pairing maps {Delta_E=z} into {L=z} injectively", failures == 0 && independent,
             std::to_string(failures) + " failures" + (independent ? "" : ", dependent images"), "0 failures");

  const DepthSpace space2 = enumerate_paths(g, 2);
  const auto transfer2 = transfer_equalizer(g, z, 2, mode);
  rep.expect("dim{L=z} at depth 2 == depth 1", transfer2.dimension() == transfer.dimension(),
             dim_text(transfer2.dimension()), dim_text(transfer.dimension()));
  std::size_t deep = 0;
  for (const auto& v : transfer2.vectors)
    if (depth_of(space2, v) > 1) ++deep;
  const Matrix<T> transfer2_op = shifted(convert(transfer_matrix(g, 2), z), z);
  for (const auto& f : transfer.vectors)
    if (!in_kernel(transfer2_op, lift_from_edges(space2, f))) ++deep;
  rep.expect("depth-2 eigenfunctions have depth <= 1 and depth-1 ones lift", deep == 0,
             std::to_string(deep) + " violations", "0 violations");

  rep.status = IsomorphismStatus::Verified;
  for (const auto& a : rep.assertions)
    if (!a.passed) rep.status = IsomorphismStatus::Failed;
  return rep;
}

template CorrespondenceReport check_exceptional<Rational>(const Graph&, const Rational&, ArithmeticMode);
template CorrespondenceReport check_exceptional<GaussianRational>(const Graph&, const GaussianRational&,
                                                                   ArithmeticMode);

CorrespondenceReport check_exceptional_numeric(const Graph& g, Complex z, double tol) {
  if (z == Complex{}) throw ZeroParameter("spectral parameter must be nonzero");
  CorrespondenceReport rep;
  rep.graph_id = g.name();
  rep.parameter = FieldTraits<Complex>::to_text(z);
  rep.mode = ArithmeticMode::Numeric;
  const auto transfer = transfer_equalizer_numeric(g, z, 1, tol);
  const auto edge = edge_equalizer_numeric(g, z, tol);
  const auto transfer2 = transfer_equalizer_numeric(g, z, 2, tol);
  rep.transfer_dim = transfer.dimension();
  rep.edge_dim = edge.dimension();
  rep.expect("dim{L=z} == dim{Delta_E=z}", transfer.dimension() == edge.dimension(), dim_text(transfer.dimension()),
             dim_text(edge.dimension()));
  rep.expect("dim{L=z} at depth 2 == depth 1", transfer2.dimension() == transfer.dimension(),
             dim_text(transfer2.dimension()), dim_text(transfer.dimension()));
  const Matrix<Complex> transfer_op = shifted(to_complex_matrix(transfer_matrix(g, 1)), z);
  double worst = 0.0;
  for (const auto& f : edge.vectors)
    worst = std::max(worst, relative_residual(transfer_op, map_edge_to_transfer(g, f)));
  const double bound = tol * (1.0 + frobenius(transfer_op));
  rep.expect("reversal pairing residual", worst <= bound, residual_text(worst), "within tolerance");
  rep.status = rep.passed() ? IsomorphismStatus::Verified : IsomorphismStatus::Failed;
  return rep;
}

std::vector<AlgebraicCheck> check_generic_algebraic(const Graph& g, const Polynomial& factor) {
  const std::function<CorrespondenceReport(const std::shared_ptr<const Polynomial>&)> run =
      [&g](const std::shared_ptr<const Polynomial>& modulus) {
        const AlgebraicNumber z = AlgebraicNumber::generator(modulus);
        CorrespondenceReport rep = check_generic(g, z, ArithmeticMode::Algebraic);
        rep.parameter = "root of " + modulus->to_string();
        return rep;
      };
  std::vector<AlgebraicCheck> out;
  for (auto& [f, rep] : with_splitting(factor, run)) out.push_back({f, std::move(rep)});
  return out;
}

std::pair<std::size_t, std::size_t> predicted_exceptional_dimensions(std::size_t c, bool bipartite) {
  const std::size_t plus = c == 1 ? c + 1 : c;
  std::size_t minus = 0;
  if (c == 1 && bipartite)
    minus = 2;
  else
    minus = bipartite ? c : c - 1;
  return {plus, minus};
}

bool DimensionFormulaReport::passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return !assertions.empty();
}

namespace {

// Undirected edges outside a breadth-first spanning tree.
std::size_t non_tree_edges(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t tree_edges = 0;
  std::queue<VertexIndex> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const VertexIndex v = q.front();
    q.pop();
    for (VertexIndex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++tree_edges;
        q.push(w);
      }
  }
  return g.undirected_edge_count() - tree_edges;
}

}  // namespace

DimensionFormulaReport check_dimension_formulas(const Graph& g) {
  DimensionFormulaReport rep;
  rep.cyclomatic = cyclomatic_number(g);
  rep.bipartite = is_bipartite(g);
  const ExactMatrix b = edge_laplacian_matrix(g);
  rep.dim_plus = nullspace_bareiss(shifted(b, Rational(1))).size();
  rep.dim_minus = nullspace_bareiss(shifted(b, Rational(-1))).size();
  std::tie(rep.expected_plus, rep.expected_minus) = predicted_exceptional_dimensions(rep.cyclomatic, rep.bipartite);

  const std::size_t removal = non_tree_edges(g);
  rep.assertions.push_back({"cyclomatic number == edges outside a spanning tree", removal == rep.cyclomatic,
                            std::to_string(rep.cyclomatic), std::to_string(removal)});
  rep.assertions.push_back({"dim{Delta_E=1}", rep.dim_plus == rep.expected_plus, std::to_string(rep.dim_plus),
                            std::to_string(rep.expected_plus)});
  rep.assertions.push_back({"dim{Delta_E=-1}", rep.dim_minus == rep.expected_minus, std::to_string(rep.dim_minus),
                            std::to_string(rep.expected_minus)});
  return rep;
}

bool homogeneous_reduction_holds(const Graph& g, const Rational& z) {
  const std::size_t q = g.branching(0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.branching(v) != q) return false;
  const Rational lambda = z + Rational(static_cast<long>(q)) / z;
  const auto eigenspace = nullspace_bareiss(shifted(adjacency_matrix(g), lambda));
  const auto equalizer = nullspace_bareiss(vertex_equalizer_matrix(g, z));
  return eigenspace == equalizer;
}

}  // namespace gqcc
