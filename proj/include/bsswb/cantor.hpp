#pragma once

#include "bsswb/program.hpp"
#include "bsswb/rat.hpp"

namespace bsswb {

struct CantorVerdict {
  enum class Kind { InPrefix, Excluded } kind;
  unsigned level = 0;  // removal level when Excluded

  friend bool operator==(const CantorVerdict&, const CantorVerdict&) = default;
};

/// Checks the removed open middle thirds of levels 1..depth.
/// Throws Error(OutOfRange) unless 0 <= q <= 1 and depth >= 1.
CantorVerdict cantor_member_depth(const Rat& q, unsigned depth);

/// The corpus machine that halts exactly on rationals outside the Cantor set.
Program cantor_program();

std::string to_string(const CantorVerdict& v);

}  // namespace bsswb
