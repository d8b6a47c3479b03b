#include "codomin/error.hpp"

namespace codomin {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::NotACoideal: return "NotACoideal";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotABialgebra: return "NotABialgebra";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotASubspace: return "NotASubspace";
    case Errc::NotCocommutative: return "NotCocommutative";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::DescentFailure: return "DescentFailure";
    case Errc::BadParams: return "BadParams";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownReference: return "UnknownReference";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<std::string> details)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), details_(std::move(details)) {}

void raise(Errc code, const std::string& message, std::vector<std::string> details) {
  throw Error(code, message, std::move(details));
}

}  // namespace codomin
