#include "rph/exact_rank.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace rph {

using boost::multiprecision::cpp_int;

namespace {

std::size_t bareiss_rank(std::vector<std::vector<cpp_int>> m) {
  if (m.empty()) return 0;
  const std::size_t n_rows = m.size();
  const std::size_t n_cols = m.front().size();
  cpp_int previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_rows && m[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(m[pivot], m[rank]);
    const cpp_int& p = m[rank][col];
    for (std::size_t i = rank + 1; i < n_rows; ++i) {
      const cpp_int factor = m[i][col];
      for (std::size_t j = col + 1; j < n_cols; ++j) m[i][j] = (p * m[i][j] - factor * m[rank][j]) / previous;
      m[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

using SparseRow = std::map<std::size_t, cpp_int>;

// row -= factor * pivot_row
void subtract(SparseRow& row, const SparseRow& pivot_row, const cpp_int& factor) {
  for (const auto& [col, value] : pivot_row) {
    auto [it, inserted] = row.try_emplace(col, 0);
    it->second -= factor * value;
    if (it->second == 0) row.erase(it);
  }
}

}  // namespace

std::size_t fraction_free_rank(std::vector<std::vector<std::int64_t>> rows) {
  std::vector<std::vector<cpp_int>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return bareiss_rank(std::move(m));
}

std::size_t sparse_rank(std::size_t rows, std::size_t cols,
                        const std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::int64_t>>& entries) {
  std::vector<SparseRow> m(rows);
  for (const auto& [at, value] : entries)
    if (value != 0) m[at.first][at.second] += value;

  // Unit pivots: the pivot row is subtracted with an integer factor, so no
  // fractions appear and the rank is unchanged.
  std::vector<bool> used(rows, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t best = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i]) continue;
      const auto it = m[i].find(col);
      if (it == m[i].end() || abs(it->second) != 1) continue;
      if (best == rows || m[i].size() < m[best].size()) best = i;
    }
    if (best == rows) continue;
    used[best] = true;
    ++rank;
    const cpp_int sign = m[best].at(col);  // +-1, its own inverse
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i]) continue;
      const auto it = m[i].find(col);
      if (it == m[i].end()) continue;
      const cpp_int factor = it->second * sign;
      subtract(m[i], m[best], factor);
    }
  }

  // What is left has zeros in every pivot column.
  std::vector<std::size_t> rest_cols;
  std::vector<std::vector<cpp_int>> rest;
  for (std::size_t i = 0; i < rows; ++i) {
    if (used[i] || m[i].empty()) continue;
    for (const auto& [col, value] : m[i]) rest_cols.push_back(col);
  }
  std::sort(rest_cols.begin(), rest_cols.end());
  rest_cols.erase(std::unique(rest_cols.begin(), rest_cols.end()), rest_cols.end());
  for (std::size_t i = 0; i < rows; ++i) {
    if (used[i] || m[i].empty()) continue;
    std::vector<cpp_int> dense(rest_cols.size());
    for (const auto& [col, value] : m[i])
      dense[static_cast<std::size_t>(std::lower_bound(rest_cols.begin(), rest_cols.end(), col) - rest_cols.begin())] =
          value;
    rest.push_back(std::move(dense));
  }
  return rank + bareiss_rank(std::move(rest));
}

}  // namespace rph
