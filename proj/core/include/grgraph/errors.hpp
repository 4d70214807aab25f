#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grgraph {

enum class ErrorKind {
  InvalidConstruction,
  SizeLimit,
  NotASubring,
  NotSubgroup,
  NotDirectSum,
  ProductEscapes,
  UnityNotInIdentityComponent,
  WrongConstruction,
  IdealCountLimit,
  GraphTooLarge,
  NotEFaithful,
  IsoViolation,
  WellDefinednessViolation,
  NotIntegerGraded,
  UnknownTheorem,
  WrongInstanceKind,
  SchemaError,
  UnknownConstructor,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `what()` is "<Kind>: <detail>"; the
/// detail names an algebraic witness or, for input errors, a schema path.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace grgraph
