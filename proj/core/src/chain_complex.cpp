#include "rph/chain_complex.hpp"

#include <algorithm>
#include <string>

#include "rph/error.hpp"
#include "rph/exact_rank.hpp"

namespace rph {

ChainBasis::ChainBasis(std::size_t order, std::vector<VertexPath> elements)
    : order_(order), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].size() != order_ + 1)
      throw GraphError(ErrorKind::InvalidInput, "basis element has the wrong length");
    if (!positions_.emplace(elements_[i], i).second)
      throw GraphError(ErrorKind::InvalidInput, "basis elements must be distinct");
  }
}

std::optional<std::size_t> ChainBasis::position(const VertexPath& element) const {
  auto it = positions_.find(element);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

int BoundaryMatrix::entry(std::size_t row, std::size_t col) const {
  for (const auto& [r, value] : columns.at(col))
    if (r == row) return value;
  return 0;
}

std::vector<std::vector<std::int64_t>> BoundaryMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, value] : columns[c]) out[r][c] = value;
  return out;
}

namespace {

std::vector<VertexPath> strip(const std::vector<RobustPath>& level) {
  std::vector<VertexPath> out;
  out.reserve(level.size());
  for (const auto& path : level) out.push_back(path.vertices);
  return out;
}

std::vector<VertexPath> vertex_elements(const ColoredRouteSimplex& simplex) {
  std::vector<VertexPath> out;
  for (VertexIndex v = 0; v < simplex.vertex_count(); ++v) out.push_back({v});
  return out;
}

std::vector<VertexPath> edge_elements(const ColoredRouteSimplex& simplex) {
  std::vector<VertexPath> out;
  for (const auto& e : simplex.edges()) out.push_back({e.from, e.to});
  return out;
}

std::string render(const VertexPath& path, const TwoTerminalDag* dag) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i != 0) out += ",";
    out += dag ? dag->name(path[i]) : std::to_string(path[i]);
  }
  return out + ")";
}

VertexPath face(const VertexPath& path, std::size_t k) {
  VertexPath out;
  out.reserve(path.size() - 1);
  for (std::size_t i = 0; i < path.size(); ++i)
    if (i != k) out.push_back(path[i]);
  return out;
}

}  // namespace

std::vector<ChainBasis> chain_bases(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                    TriangleSemantics semantics) {
  std::vector<ChainBasis> bases;
  bases.emplace_back(0, vertex_elements(simplex));
  if (p_max >= 1) bases.emplace_back(1, edge_elements(simplex));
  if (p_max >= 2) {
    auto levels = robust_levels(simplex, p_max, semantics);
    for (std::size_t p = 2; p <= p_max; ++p)
      bases.emplace_back(p, p < levels.size() ? strip(levels[p]) : std::vector<VertexPath>{});
  }
  return bases;
}

ChainBasis chain_basis(const ColoredRouteSimplex& simplex, std::size_t p, TriangleSemantics semantics) {
  if (p == 0) return ChainBasis(0, vertex_elements(simplex));
  if (p == 1) return ChainBasis(1, edge_elements(simplex));
  return ChainBasis(p, strip(robust_paths(simplex, p, semantics)));
}

BoundaryMatrix boundary_matrix(const ChainBasis& lower, const ChainBasis& upper) {
  if (upper.order() == 0 || lower.order() + 1 != upper.order())
    throw GraphError(ErrorKind::InvalidInput, "boundary needs bases of consecutive orders p-1 and p >= 1");
  BoundaryMatrix m;
  m.order = upper.order();
  m.rows = lower.dimension();
  m.cols = upper.dimension();
  m.columns.resize(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    const auto& element = upper.elements()[c];
    auto& column = m.columns[c];
    for (std::size_t k = 0; k < element.size(); ++k) {
      auto f = face(element, k);
      auto row = lower.position(f);
      if (!row)
        throw GraphError(ErrorKind::ClosureViolation, "face of a basis element is missing from the lower basis",
                         {render(element, nullptr), render(f, nullptr)});
      column.emplace_back(*row, k % 2 == 0 ? 1 : -1);
    }
    std::sort(column.begin(), column.end());
  }
  return m;
}

BoundaryMatrix boundary_matrix(const ColoredRouteSimplex& simplex, std::size_t p, TriangleSemantics semantics) {
  if (p == 0) throw GraphError(ErrorKind::InvalidInput, "the order-0 boundary is the zero map");
  auto bases = chain_bases(simplex, p, semantics);
  return boundary_matrix(bases[p - 1], bases[p]);
}

std::size_t boundary_rank(const BoundaryMatrix& matrix) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::int64_t>> entries;
  for (std::size_t c = 0; c < matrix.cols; ++c)
    for (const auto& [r, v] : matrix.columns[c]) entries.push_back({{r, c}, v});
  return sparse_rank(matrix.rows, matrix.cols, entries);
}

VerificationReport verify_complex(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                  TriangleSemantics semantics) {
  VerificationReport report;
  report.p_max = p_max;
  const auto bases = chain_bases(simplex, p_max, semantics);
  const auto* dag = &simplex.base();

  std::vector<std::optional<BoundaryMatrix>> boundaries(p_max + 1);
  for (std::size_t p = 1; p <= p_max; ++p) {
    LevelCheck level;
    level.order = p;
    for (const auto& element : bases[p].elements()) {
      for (std::size_t k = 0; k < element.size() && level.closure; ++k) {
        auto f = face(element, k);
        if (!bases[p - 1].position(f)) {
          level.closure = false;
          if (!report.counterexample)
            report.counterexample = "face " + render(f, dag) + " of " + render(element, dag) +
                                    " is not in the order-" + std::to_string(p - 1) + " basis";
        }
      }
      if (!level.closure) break;
    }
    if (level.closure) boundaries[p] = boundary_matrix(bases[p - 1], bases[p]);

    if (p >= 2 && boundaries[p] && boundaries[p - 1]) {
      const auto& upper = *boundaries[p];
      const auto& lower = *boundaries[p - 1];
      for (std::size_t c = 0; c < upper.cols && level.composition_zero; ++c) {
        std::map<std::size_t, long long> acc;
        for (const auto& [mid, a] : upper.columns[c])
          for (const auto& [row, b] : lower.columns[mid]) acc[row] += static_cast<long long>(a) * b;
        for (const auto& [row, value] : acc) {
          if (value != 0) {
            level.composition_zero = false;
            if (!report.counterexample)
              report.counterexample = "boundary of boundary of " + render(bases[p].elements()[c], dag) +
                                      " is non-zero at " + render(bases[p - 2].elements()[row], dag);
            break;
          }
        }
      }
    } else if (p >= 2) {
      level.composition_zero = false;
    }
    report.passed = report.passed && level.closure && level.composition_zero;
    report.levels.push_back(level);
  }
  return report;
}

std::vector<std::size_t> chain_dimensions(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                          TriangleSemantics semantics) {
  std::vector<std::size_t> dims;
  for (const auto& basis : chain_bases(simplex, p_max, semantics)) dims.push_back(basis.dimension());
  return dims;
}

std::vector<std::size_t> betti_numbers(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                       TriangleSemantics semantics) {
  const auto bases = chain_bases(simplex, p_max + 1, semantics);
  // rank[p] = rank d_p; rank[0] = 0.
  std::vector<std::size_t> rank(p_max + 2, 0);
  for (std::size_t p = 1; p <= p_max + 1; ++p) rank[p] = boundary_rank(boundary_matrix(bases[p - 1], bases[p]));
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p <= p_max; ++p) betti.push_back(bases[p].dimension() - rank[p] - rank[p + 1]);
  return betti;
}

}  // namespace rph
