#pragma once

#include <array>
#include <cstdint>

#include "bsswb/mpoly.hpp"

namespace bsswb {

struct IrreducibilityOptions {
  unsigned degree_bound = 6;
  /// Ignore integer content (test the primitive part only).
  bool primitive_only = false;
  /// Cap on interpolated candidate divisors across the whole search.
  std::uint64_t candidate_cap = 5'000'000;
  /// Route bivariate cubics to the direct linear-factor search.
  bool dense_fast_path = true;
};

/// Irreducibility in Z[vars] of a nonzero integer polynomial. Content > 1
/// counts as a factor unless `primitive_only`; nonzero constants are
/// irreducible iff they are +-1 or +-prime.
/// Throws Error(DegreeBoundExceeded), Error(SearchSpaceTooLarge),
/// Error(InvalidArgument) for zero or non-integer input.
bool poly_irreducible_Z(const MPoly& p, const IrreducibilityOptions& opts = {});

/// Dense bivariate polynomial of total degree <= 3; coefficients in the order
/// 1, X, Y, X^2, XY, Y^2, X^3, X^2Y, XY^2, Y^3.
struct SmallBivariate {
  std::array<std::int64_t, 10> c{};
};

/// Same contract as poly_irreducible_Z (content counts) for |coefficients|
/// <= 2^20; a reducible such polynomial has a linear factor, which is
/// searched directly.
bool poly_irreducible_small(const SmallBivariate& p);

MPoly to_mpoly(const SmallBivariate& p);

}  // namespace bsswb
