#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bfan/linalg.hpp"
#include "bfan/rational.hpp"

namespace bfan {

/// A point of the cocharacter lattice N = Z^n, componentwise exact.
using LatticeVector = std::vector<Int>;

bool is_zero(const LatticeVector& v);

/// gcd of the coordinates == 1 (and v != 0).
bool is_primitive(const LatticeVector& v);

struct PrimitivePart {
  LatticeVector vector;  // primitive, same direction as the input
  Int factor;            // positive; input = factor * vector
};

/// Divides out the (positive) gcd of the coordinates. Throws ZeroVectorError
/// on the zero vector.
PrimitivePart make_primitive(const LatticeVector& v);

/// Writes w = a_1 v_1 + ... + a_m v_m with exact rational coefficients.
/// The generators must be linearly independent (DependentGeneratorsError)
/// and w must lie in their span (NotInSpanError).
std::vector<Rat> solve_in_generators(const std::vector<LatticeVector>& generators,
                                     const LatticeVector& w);

/// Rational-coefficient variant used for support sampling.
std::vector<Rat> solve_in_generators_rat(const std::vector<LatticeVector>& generators,
                                         const RatVector& w);

/// Index of the sublattice spanned by the generators inside the saturation
/// of their span: the gcd of the maximal minors of the generator matrix.
/// Equals 1 exactly when the simplicial cone they span is smooth.
Int cone_multiplicity(const std::vector<LatticeVector>& generators);

/// All integer points lo <= p <= hi (componentwise) satisfying the
/// predicate, in lexicographic order. An inverted box is empty.
std::vector<LatticeVector> enumerate_integer_points(
    const LatticeVector& box_lo, const LatticeVector& box_hi,
    const std::function<bool(const LatticeVector&)>& predicate);

RatMatrix columns_to_matrix(const std::vector<LatticeVector>& columns);

}  // namespace bfan
