#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rph {

// Rank over the rationals of an integer matrix given as rows, by fraction-free
// (Bareiss) elimination in arbitrary-precision integers. Every intermediate
// entry is a minor of the input, so each division is exact.
std::size_t fraction_free_rank(std::vector<std::vector<std::int64_t>> rows);

// Same rank for a sparse matrix given as (row, col, value) triples. Columns
// with a +-1 pivot are eliminated first by integer row operations; whatever
// is left goes through fraction_free_rank.
std::size_t sparse_rank(std::size_t rows, std::size_t cols,
                        const std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::int64_t>>& entries);

}  // namespace rph
