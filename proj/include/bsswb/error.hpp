#pragma once

#include <stdexcept>
#include <string>

namespace bsswb {

enum class Errc {
  DivisionByZero,
  UnsupportedOrder,
  UnknownSymbol,
  DegreeBoundExceeded,
  DegreeUnsupported,
  SyntaxError,
  MissingTransition,
  UnknownState,
  BadConstIndex,
  NotACode,
  DeserializeError,
  NonRationalFirstConstant,
  EmptyVector,
  SubsetSearchTooLarge,
  SearchSpaceTooLarge,
  OutOfRange,
  BudgetExhausted,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// All library failures are reported through this exception. Parse errors
/// additionally carry a 1-based line/column (0 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int line = 0, int column = 0);

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Errc code_;
  int line_;
  int column_;
};

}  // namespace bsswb
