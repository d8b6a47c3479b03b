#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace codomin {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  ShapeMismatch,
  AxiomViolation,
  NotACoideal,
  NotReflexive,
  NotABialgebra,
  NotSurjective,
  NotASubspace,
  NotCocommutative,
  EmptyFamily,
  DescentFailure,
  BadParams,
  UnsupportedCharacteristic,
  Unsupported,
  ParseError,
  ValidationError,
  UnknownReference,
};

const char* to_string(Errc code);

/// Every failure raised by the library. `details()` carries the individual
/// findings (violated axiom names, failed coordinates, ...) when there are
/// several of them.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::string> details = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  Errc code_;
  std::vector<std::string> details_;
};

[[noreturn]] void raise(Errc code, const std::string& message,
                        std::vector<std::string> details = {});

}  // namespace codomin
