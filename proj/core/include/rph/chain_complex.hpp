#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rph/robust_paths.hpp"

namespace rph {

// Canonical basis of the order-p chain space: vertices (p = 0), simplex edges
// (p = 1), robust p-paths (p >= 2).
class ChainBasis {
 public:
  ChainBasis(std::size_t order, std::vector<VertexPath> elements);

  std::size_t order() const noexcept { return order_; }
  std::size_t dimension() const noexcept { return elements_.size(); }
  const std::vector<VertexPath>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> position(const VertexPath& element) const;

 private:
  std::size_t order_;
  std::vector<VertexPath> elements_;
  std::map<VertexPath, std::size_t> positions_;
};

// Sparse column-major integer matrix of the boundary map from the order-p
// basis (columns) to the order-(p-1) basis (rows).
struct BoundaryMatrix {
  using Column = std::vector<std::pair<std::size_t, int>>;  // (row, entry), ascending rows

  std::size_t order = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  int entry(std::size_t row, std::size_t col) const;
  std::vector<std::vector<std::int64_t>> dense() const;
};

ChainBasis chain_basis(const ColoredRouteSimplex& simplex, std::size_t p,
                       TriangleSemantics semantics = TriangleSemantics::Literal);

// Bases for every order 0..p_max (empty beyond the last non-empty level).
std::vector<ChainBasis> chain_bases(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                    TriangleSemantics semantics = TriangleSemantics::Literal);

// d_p restricted to the given bases (`upper.order() == p >= 1`, `lower.order() == p - 1`).
// Throws GraphError(ClosureViolation) naming the first face missing from `lower`.
BoundaryMatrix boundary_matrix(const ChainBasis& lower, const ChainBasis& upper);
BoundaryMatrix boundary_matrix(const ColoredRouteSimplex& simplex, std::size_t p,
                               TriangleSemantics semantics = TriangleSemantics::Literal);

// Rank over Q.
std::size_t boundary_rank(const BoundaryMatrix& matrix);

struct LevelCheck {
  std::size_t order = 0;
  bool closure = true;           // every face of every order-p element is in the order-(p-1) basis
  bool composition_zero = true;  // d_{p-1} * d_p == 0 (only meaningful for p >= 2)
};

struct VerificationReport {
  bool passed = true;
  std::size_t p_max = 0;
  std::vector<LevelCheck> levels;
  std::optional<std::string> counterexample;
};

// Checks closure and d_{p-1} d_p = 0 for every order up to p_max.
VerificationReport verify_complex(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                  TriangleSemantics semantics = TriangleSemantics::Literal);

// beta_p for 0 <= p <= p_max, with d_0 = 0 and d_{p_max+1} taken on the
// (possibly empty) order-(p_max+1) basis.
std::vector<std::size_t> betti_numbers(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                       TriangleSemantics semantics = TriangleSemantics::Literal);

// dim Omega_p for 0 <= p <= p_max.
std::vector<std::size_t> chain_dimensions(const ColoredRouteSimplex& simplex, std::size_t p_max,
                                          TriangleSemantics semantics = TriangleSemantics::Literal);

}  // namespace rph
