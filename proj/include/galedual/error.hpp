#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace galedual {

enum class ErrorCode {
  InvalidInput,
  DependentRows,
  NotPrimitive,
  NoPivot,
  NotEssential,
  NotFullDimensional,
  NoRationalScaling,
  ZeroCoordinate,
  CommonComponent,
  DegreeCap,
  DimensionCap,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a lattice that must be saturated is not; carries the index
/// of the generated subgroup in its saturation.
class NotPrimitiveError : public Error {
 public:
  NotPrimitiveError(const std::string& what, mpz_class index)
      : Error(ErrorCode::NotPrimitive, what), index_(std::move(index)) {}

  const mpz_class& index() const noexcept { return index_; }

 private:
  mpz_class index_;
};

}  // namespace galedual
