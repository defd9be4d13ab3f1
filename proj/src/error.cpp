#include "galedual/error.hpp"

namespace galedual {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::DependentRows: return "dependent-rows";
    case ErrorCode::NotPrimitive: return "not-primitive";
    case ErrorCode::NoPivot: return "no-pivot";
    case ErrorCode::NotEssential: return "not-essential";
    case ErrorCode::NotFullDimensional: return "not-full-dimensional";
    case ErrorCode::NoRationalScaling: return "no-rational-scaling";
    case ErrorCode::ZeroCoordinate: return "zero-coordinate";
    case ErrorCode::CommonComponent: return "common-component";
    case ErrorCode::DegreeCap: return "degree-cap";
    case ErrorCode::DimensionCap: return "dimension-cap";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace galedual
