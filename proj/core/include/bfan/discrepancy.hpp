#pragma once

#include <optional>
#include <vector>

#include "bfan/bdivisor.hpp"
#include "bfan/classification.hpp"
#include "bfan/fan.hpp"

namespace bfan {

/// Rational covectors m_sigma, one per maximal cone, realizing the support
/// function of the boundary divisor sum (1/r_rho) D_rho: <m_sigma, v> =
/// -1/r_v on every generator v of sigma.
struct SupportFunctionData {
  std::vector<RatVector> cone_covectors;

  Rat value(const Fan& fan, std::size_t cone_index, const LatticeVector& point) const;
};

/// Solves the defining equations cone by cone. Throws NotQGorensteinError
/// naming the first maximal cone on which they are inconsistent.
SupportFunctionData boundary_support_function(const Fan& fan, const CoefficientRule& rule);

/// Discrepancies of the exceptional toric valuation w over the pair:
/// b' = -phi(w) - 1/r_w, b = r_w * b', a = b' - d. Requires w primitive,
/// inside the support and not a ray of the fan.
DiscrepancyRecord discrepancy_at(const Fan& fan, const CoefficientRule& rule,
                                 const LatticeVector& w);

/// The complete, duplicate-free, lexicographically sorted list of primitive
/// non-ray vectors in |fan| with b <= threshold. Requires threshold >= -1.
/// jobs > 1 enumerates maximal cones in parallel with identical output.
std::vector<DiscrepancyRecord> enumerate_at_most(const Fan& fan, const CoefficientRule& rule,
                                                 const Rat& threshold, int jobs = 1);

/// Threshold classification of the pair, plus the ordinary classification of
/// the underlying fan (zero boundary) computed by the same engine.
Classification classify(const Fan& fan, const CoefficientRule& rule, int jobs = 1);

/// Exact minimum of b over exceptional toric valuations when it is <= cap,
/// together with its witness; nullopt when every exceptional valuation has
/// b > cap. Requires cap >= -1.
std::optional<DiscrepancyRecord> min_discrepancy_below(const Fan& fan,
                                                       const CoefficientRule& rule,
                                                       const Rat& cap, int jobs = 1);

}  // namespace bfan
