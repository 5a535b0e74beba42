#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadrik {

enum class ErrorCode {
  // exactmath
  ZeroPolynomial,
  DuplicateAbscissa,
  ConstantPolynomial,
  DivisionByZero,
  BadRational,
  // pencil / stability / singularities
  NonRegularPencil,
  LinearlyDependentPencil,
  NotDiagonalizable,
  WrongDimension,
  SingularMatrix,
  // volume
  NonPositiveVolume,
  DensityExceedsOne,
  UnknownLabel,
  // sextic
  WrongDegree,
  NotKEInput,
  AllInvariantsZero,
  // input documents
  MalformedDocument,
  NonSymmetricMatrix,
  SizeMismatch,
  BadPartition,
  InvalidArgument,
};

enum class ErrorCategory { Input, Mathematical, Internal };

std::string_view to_string(ErrorCode code);
ErrorCategory category(ErrorCode code);

// Process exit code for the CLI: 2 input, 3 mathematical rejection, 4 internal.
int exit_code(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadrik
