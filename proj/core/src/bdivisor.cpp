#include "bfan/bdivisor.hpp"

#include <algorithm>
#include <stdexcept>

#include "bfan/errors.hpp"

namespace bfan {

CoefficientRule CoefficientRule::zero() { return CoefficientRule{}; }

CoefficientRule CoefficientRule::finite_support(
    std::vector<std::pair<LatticeVector, Rat>> entries) {
  CoefficientRule rule;
  rule.kind_ = Kind::FiniteSupport;
  for (auto& [key, value] : entries) {
    if (!is_primitive(key)) throw NotPrimitiveError{};
    if (value < 0 || value >= 1)
      throw InvalidCoefficientError("coefficient outside [0,1)");
    if (!rule.table_.emplace(std::move(key), std::move(value)).second)
      throw InvalidCoefficientError("duplicate support vector");
  }
  return rule;
}

CoefficientRule CoefficientRule::brauer(BrauerClass cls) {
  CoefficientRule rule;
  rule.kind_ = Kind::Brauer;
  rule.brauer_ = std::move(cls);
  return rule;
}

const BrauerClass& CoefficientRule::brauer_class() const {
  if (!brauer_) throw std::logic_error("not a Brauer rule");
  return *brauer_;
}

Rat CoefficientRule::coefficient(const LatticeVector& w) const {
  const LatticeVector primitive = make_primitive(w).vector;
  switch (kind_) {
    case Kind::Zero:
      return Rat(0);
    case Kind::FiniteSupport: {
      auto it = table_.find(primitive);
      return it == table_.end() ? Rat(0) : it->second;
    }
    case Kind::Brauer: {
      const Int order = order_of_image(*brauer_, primitive);
      return make_rat(order - 1, order);
    }
  }
  throw std::logic_error("unreachable");
}

Rat CoefficientRule::ramification_index(const LatticeVector& w) const {
  if (kind_ == Kind::Brauer) {
    return Rat(order_of_image(*brauer_, make_primitive(w).vector));
  }
  const Rat d = coefficient(w);
  return Rat(1) / (Rat(1) - d);
}

std::vector<RayDatum> trace(const CoefficientRule& rule, const Fan& fan) {
  std::vector<RayDatum> data;
  data.reserve(fan.rays.size());
  for (const LatticeVector& ray : fan.rays) {
    data.push_back(RayDatum{ray, rule.coefficient(ray), rule.ramification_index(ray)});
  }
  std::sort(data.begin(), data.end(),
            [](const RayDatum& x, const RayDatum& y) { return x.w < y.w; });
  return data;
}

Rat coefficient(const CoefficientRule& rule, const LatticeVector& w) {
  return rule.coefficient(w);
}

Rat ramification_index(const CoefficientRule& rule, const LatticeVector& w) {
  return rule.ramification_index(w);
}

}  // namespace bfan
