#include "bsswb/cantor.hpp"

#include "bsswb/error.hpp"

namespace bsswb {

namespace {
const char* const kCantorText =
#include "cantor_text.inc"
    ;
}

CantorVerdict cantor_member_depth(const Rat& q, unsigned depth) {
  if (depth < 1) throw Error(Errc::OutOfRange, "depth must be at least 1");
  if (q < 0 || q > 1) throw Error(Errc::OutOfRange, "q must lie in [0, 1]");
  Rat x = q;
  const Rat third(1, 3), two_thirds(2, 3);
  for (unsigned level = 1; level <= depth; ++level) {
    if (x > third && x < two_thirds) return {CantorVerdict::Kind::Excluded, level};
    x *= 3;
    if (x > 1) x -= 2;
  }
  return {CantorVerdict::Kind::InPrefix, 0};
}

Program cantor_program() { return parse_program(kCantorText); }

std::string to_string(const CantorVerdict& v) {
  if (v.kind == CantorVerdict::Kind::InPrefix) return "in-prefix";
  return "excluded level=" + std::to_string(v.level);
}

}  // namespace bsswb
