#include "bsswb/error.hpp"

namespace bsswb {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::DegreeUnsupported: return "DegreeUnsupported";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MissingTransition: return "MissingTransition";
    case Errc::UnknownState: return "UnknownState";
    case Errc::BadConstIndex: return "BadConstIndex";
    case Errc::NotACode: return "NotACode";
    case Errc::DeserializeError: return "DeserializeError";
    case Errc::NonRationalFirstConstant: return "NonRationalFirstConstant";
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::SubsetSearchTooLarge: return "SubsetSearchTooLarge";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

static std::string decorate(Errc code, const std::string& what, int line, int column) {
  std::string s = to_string(code);
  if (line > 0) s += " at " + std::to_string(line) + ":" + std::to_string(column);
  if (!what.empty()) s += ": " + what;
  return s;
}

Error::Error(Errc code, const std::string& what, int line, int column)
    : std::runtime_error(decorate(code, what, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

}  // namespace bsswb
