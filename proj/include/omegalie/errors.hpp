#pragma once

#include <stdexcept>
#include <string>

namespace omegalie {

/// Base class for every error raised by the library. `kind()` is the stable
/// identifier used in structured error payloads.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define OMEGALIE_DECLARE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return #Name; }       \
  }

/// Malformed algebra document.
OMEGALIE_DECLARE_ERROR(SchemaError);
/// A bracket or form entry violates the Z2-grading.
OMEGALIE_DECLARE_ERROR(GradingError);
/// Explicit bracket entries contradict graded skew-symmetry.
OMEGALIE_DECLARE_ERROR(SkewError);
/// Operands live in ambient spaces of different dimension.
OMEGALIE_DECLARE_ERROR(AmbientMismatch);
/// A map is not an element of the space it was checked against.
OMEGALIE_DECLARE_ERROR(NotMember);
/// A characteristic polynomial does not split into linear factors over Q(i).
OMEGALIE_DECLARE_ERROR(NotSplit);
/// Catalog lookup of an unknown id.
OMEGALIE_DECLARE_ERROR(UnknownId);

#undef OMEGALIE_DECLARE_ERROR

}  // namespace omegalie
