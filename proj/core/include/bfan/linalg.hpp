#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bfan/rational.hpp"

namespace bfan {

// Dense exact rational matrices, row major. Sizes here are tiny (lattice
// rank times a handful of generators), so plain Gaussian elimination over
// mpq is the right tool.
using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

struct RowReduction {
  RatMatrix rref;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per pivot row
  std::size_t rank = 0;
};

RowReduction row_reduce(RatMatrix m);

std::size_t rat_rank(const RatMatrix& m);

/// Solves A x = b. Returns nullopt when inconsistent. When the system is
/// underdetermined the free variables are set to zero, so the result is
/// deterministic. `unique` reports whether the solution was forced.
struct LinearSolution {
  RatVector x;
  bool unique = false;
};
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b);

/// Basis of the right null space of A (each basis vector has size = #cols).
std::vector<RatVector> nullspace(const RatMatrix& a);

Rat dot(const RatVector& a, const std::vector<Int>& b);
Rat dot(const RatVector& a, const RatVector& b);

}  // namespace bfan
