#pragma once

#include <cstddef>
#include <vector>

#include "bsswb/rat.hpp"

namespace bsswb {

/// Univariate polynomial over Q, coefficient of x^i at index i.
using UPoly = std::vector<Rat>;

namespace upoly {

Rat eval(const UPoly& p, const Rat& x);
void strip(UPoly& p);
UPoly derivative(const UPoly& p);
UPoly rem(const UPoly& a, const UPoly& b);
/// Number of distinct real roots in the open interval (a, b).
std::size_t count_roots(const UPoly& p, const Rat& a, const Rat& b);

}  // namespace upoly

}  // namespace bsswb
