#include "grgraph/errors.hpp"

namespace grgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConstruction: return "InvalidConstruction";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotASubring: return "NotASubring";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::ProductEscapes: return "ProductEscapes";
    case ErrorKind::UnityNotInIdentityComponent: return "UnityNotInIdentityComponent";
    case ErrorKind::WrongConstruction: return "WrongConstruction";
    case ErrorKind::IdealCountLimit: return "IdealCountLimit";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::NotEFaithful: return "NotEFaithful";
    case ErrorKind::IsoViolation: return "IsoViolation";
    case ErrorKind::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorKind::NotIntegerGraded: return "NotIntegerGraded";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::WrongInstanceKind: return "WrongInstanceKind";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownConstructor: return "UnknownConstructor";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace grgraph
