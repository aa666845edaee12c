#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bfan/lattice.hpp"

namespace bfan {

/// A cone of a fan, as sorted indices into the fan's ray list.
struct Cone {
  std::vector<std::size_t> ray_indices;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone&, const Cone&) = default;
};

/// A rational polyhedral fan: lattice rank, primitive ray generators and the
/// list of maximal cones. Fans are immutable values; every operation below
/// returns a new fan.
struct Fan {
  int rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> max_cones;

  std::vector<LatticeVector> cone_generators(const Cone& c) const;
  bool is_simplicial() const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Structural comparison after sorting rays and cones into a canonical order.
bool same_fan(const Fan& a, const Fan& b);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> caveats;
  bool ok() const { return violations.empty(); }
};

/// Primitivity, strong convexity and (for simplicial fans) the pairwise
/// face-intersection condition. Non-simplicial fans get the reduced check
/// plus a recorded caveat.
ValidationReport validate(const Fan& fan);

/// Exact membership of w in the cone spanned by the given generators.
bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& w);

/// Exact membership of w in |fan|.
bool fan_contains(const Fan& fan, const LatticeVector& w);
bool fan_contains_rat(const Fan& fan, const RatVector& w);

/// Facets of cone(generators) as sorted generator-index subsets.
std::vector<std::vector<std::size_t>> cone_facets(const std::vector<LatticeVector>& generators);

/// The unique minimal face of a cone of the fan whose relative interior
/// contains w. Throws NotInSupportError when w is outside |fan| and
/// ZeroVectorError on w = 0.
Cone find_containing_cone(const Fan& fan, const LatticeVector& w);

/// Simplicial refinement with the same rays and support: each non-simplicial
/// maximal cone is replaced by its pulling triangulation, recursively pulling
/// the lexicographically smallest generator. Simplicial fans come back
/// unchanged.
Fan triangulate(const Fan& fan);

/// Star subdivision at a primitive w in |fan|: adds the ray through w and
/// replaces every (simplicial) cone containing w by the cones obtained by
/// swapping w for one generator with positive coefficient. Fans with
/// non-simplicial cones are triangulated first.
Fan star_subdivide(const Fan& fan, const LatticeVector& w);

/// Star subdivision at the primitive part of the sum of the cone's
/// generators (the blowup of the corresponding stratum).
Fan blowup_stratum(const Fan& fan, const Cone& cone);

/// Simplicial refinement in which every cone has multiplicity 1. Subdivision
/// centers are nonzero lattice points of the half-open fundamental
/// parallelepiped of an offending cone, chosen to minimize the coefficient
/// sum (ties broken lexicographically), made primitive.
Fan resolve(const Fan& fan);

/// Same as resolve, also reporting the subdivision centers in order.
Fan resolve_with_log(const Fan& fan, std::vector<LatticeVector>& centers);

}  // namespace bfan
