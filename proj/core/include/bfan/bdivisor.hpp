#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bfan/brauer.hpp"
#include "bfan/fan.hpp"
#include "bfan/lattice.hpp"

namespace bfan {

/// A b-divisor as a total coefficient rule on toric valuations: every
/// primitive lattice vector gets a coefficient in [0,1), and the value
/// depends only on the ray the vector spans. Rules are immutable.
class CoefficientRule {
 public:
  enum class Kind { Zero, FiniteSupport, Brauer };

  static CoefficientRule zero();

  /// Proper-transform style rule: listed primitive vectors carry the given
  /// coefficients, everything else 0. Keys must be primitive and distinct,
  /// coefficients in [0,1).
  static CoefficientRule finite_support(
      std::vector<std::pair<LatticeVector, Rat>> entries);

  /// Ramification rule of a toric Brauer class: d(w) = 1 - 1/order(M w).
  static CoefficientRule brauer(BrauerClass cls);

  Kind kind() const { return kind_; }
  const BrauerClass& brauer_class() const;

  /// Coefficient along the divisor of w (w is primitivized internally).
  Rat coefficient(const LatticeVector& w) const;

  /// 1 / (1 - coefficient(w)), always in [1, infinity).
  Rat ramification_index(const LatticeVector& w) const;

 private:
  CoefficientRule() = default;
  Kind kind_ = Kind::Zero;
  std::map<LatticeVector, Rat> table_;
  std::optional<BrauerClass> brauer_;
};

/// Per-ray coefficient data of a rule on a fixed fan.
struct RayDatum {
  LatticeVector w;  // primitive ray generator
  Rat d;            // coefficient, in [0,1)
  Rat r;            // ramification index, exactly 1/(1-d)
};

/// The trace of the rule on the fan: one datum per ray, sorted
/// lexicographically by ray vector.
std::vector<RayDatum> trace(const CoefficientRule& rule, const Fan& fan);

/// Free-function spellings of the rule accessors.
Rat coefficient(const CoefficientRule& rule, const LatticeVector& w);
Rat ramification_index(const CoefficientRule& rule, const LatticeVector& w);

}  // namespace bfan
