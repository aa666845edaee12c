#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfan {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
  ZeroVectorError() : Error("zero vector is not a valid lattice direction") {}
};

struct NotInSpanError : Error {
  NotInSpanError() : Error("vector is not in the span of the generators") {}
};

struct DependentGeneratorsError : Error {
  DependentGeneratorsError() : Error("generators are linearly dependent") {}
};

struct NotInSupportError : Error {
  NotInSupportError() : Error("vector lies outside the support of the fan") {}
};

struct RayAlreadyPresentError : Error {
  RayAlreadyPresentError() : Error("ray is already present in the fan") {}
};

struct NotPrimitiveError : Error {
  NotPrimitiveError() : Error("vector is not primitive") {}
};

struct NotExceptionalError : Error {
  NotExceptionalError() : Error("vector spans a ray of the fan, hence is not exceptional") {}
};

/// The pair is not Q-Gorenstein: the boundary support function has no
/// solution on the named maximal cone.
struct NotQGorensteinError : Error {
  explicit NotQGorensteinError(std::size_t cone)
      : Error("pair is not Q-Gorenstein on maximal cone #" + std::to_string(cone)),
        cone_index(cone) {}
  std::size_t cone_index;
};

struct InvalidCTripleError : Error {
  using Error::Error;
};

struct CompositeModulusError : Error {
  explicit CompositeModulusError(const std::string& what) : Error(what) {}
};

struct InvalidBrauerMatrixError : Error {
  using Error::Error;
};

struct InvalidCoefficientError : Error {
  using Error::Error;
};

/// Internal-consistency trap: a postcondition the theory guarantees failed.
struct VerificationFailedError : Error {
  using Error::Error;
};

}  // namespace bfan
