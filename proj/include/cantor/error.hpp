#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

enum class ErrorKind {
  MixedField,
  DivisionByZero,
  Syntax,
  NegativeInput,
  XOutOfRange,
  EntryNotGreaterThanOne,
  UnknownQuasiGreedy,
  NotARepresentationOf1,
  NotAlternate,
  UnsupportedFormat,
  SumNotGreaterThanOne,
  TailInequalityViolated,
  ZeroPeriod,
  DigitOverflow,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cantor
