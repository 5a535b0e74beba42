#include "quadrik/error.hpp"

namespace quadrik {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::NonRegularPencil: return "NonRegularPencil";
    case ErrorCode::LinearlyDependentPencil: return "LinearlyDependentPencil";
    case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonPositiveVolume: return "NonPositiveVolume";
    case ErrorCode::DensityExceedsOne: return "DensityExceedsOne";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotKEInput: return "NotKEInput";
    case ErrorCode::AllInvariantsZero: return "AllInvariantsZero";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NonSymmetricMatrix: return "NonSymmetricMatrix";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadRational:
    case ErrorCode::MalformedDocument:
    case ErrorCode::NonSymmetricMatrix:
    case ErrorCode::SizeMismatch:
    case ErrorCode::BadPartition:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownLabel:
    case ErrorCode::WrongDegree:
    case ErrorCode::WrongDimension:
      return ErrorCategory::Input;
    case ErrorCode::AllInvariantsZero:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Mathematical;
  }
}

int exit_code(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Input: return 2;
    case ErrorCategory::Mathematical: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

}  // namespace quadrik
