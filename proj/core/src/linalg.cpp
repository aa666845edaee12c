#include "bfan/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace bfan {

RowReduction row_reduce(RatMatrix m) {
  RowReduction out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    const Rat inv = Rat(1) / m[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.rref = std::move(m);
  return out;
}

std::size_t rat_rank(const RatMatrix& m) { return row_reduce(m).rank; }

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (rows == 0) return LinearSolution{RatVector(cols, Rat(0)), cols == 0};

  RatMatrix aug = a;
  for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(b[r]);
  RowReduction red = row_reduce(std::move(aug));

  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] == cols) return std::nullopt;  // pivot in the rhs column
  }
  LinearSolution sol;
  sol.x.assign(cols, Rat(0));
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    sol.x[red.pivots[r]] = red.rref[r][cols];
  }
  sol.unique = red.pivots.size() == cols;
  return sol;
}

std::vector<RatVector> nullspace(const RatMatrix& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  RowReduction red = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
      v[red.pivots[r]] = -red.rref[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat dot(const RatVector& a, const std::vector<Int>& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace bfan
