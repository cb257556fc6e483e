#include "bsswb/rat.hpp"

#include "bsswb/error.hpp"

namespace bsswb {

Rat parse_rat(const std::string& text) {
  auto digits = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw Error(Errc::SyntaxError, "not a rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + text + "'");
  return make_rat(BigInt(num), d);
}

}  // namespace bsswb
