#pragma once

#include <stdexcept>
#include <string>

namespace secant {

enum class ErrorCode {
  InvalidArgument,
  Syntax,
  UnknownRing,
  CoefficientNotInRing,
  NameCollision,
  UnsupportedBase,
  NotDetectedFinite,
  NotTriviallyGenerated,
  NotARelation,
  NotARelationModA,
  NonUnitDivisor,
  Internal,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception; the C API maps
// the code onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace secant
