#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "bsswb/field_elem.hpp"

namespace bsswb {

/// Closed rational interval containing a real; lo <= hi.
struct Interval {
  Rat lo, hi;
};

/// k -> interval of width <= 2^-k containing the bound real, nested in k.
/// Must be pure.
using IntervalOracle = std::function<Interval(unsigned k)>;

/// Non-Archimedean order: Tm >> ... >> T1 >> Q, every Ti positive.
struct SymbolicInfinite {};

/// Ti is bound to the real produced by oracles[i-1]; the bound reals are
/// assumed algebraically independent over Q.
struct NumericBinding {
  std::vector<IntervalOracle> oracles;
};

using SignMode = std::variant<SymbolicInfinite, NumericBinding>;

/// Sign of x; 0 iff x is the zero function. Throws Error(InvalidArgument) if
/// a symbol lacks an oracle, Error(UnsupportedOrder) if refinement does not
/// separate from 0 within the internal precision cap.
int sign(const RatFunc& x, const SignMode& mode);
/// FieldElem version: algebraic elements need an empty base.
int sign(const FieldElem& x, const SignMode& mode);

/// (floor(x), x - floor(x)) for a constant x. Non-constant x is rejected with
/// Error(UnsupportedOrder) in either mode.
std::pair<BigInt, RatFunc> floor_frac(const RatFunc& x, const SignMode& mode);

/// Interval evaluation of a polynomial over rational intervals.
Interval evaluate_interval(const MPoly& p, const std::vector<Interval>& boxes);

IntervalOracle oracle_e();
IntervalOracle oracle_pi();
/// Degenerate oracle for a rational (useful for tests; not transcendental).
IntervalOracle oracle_rational(const Rat& value);

}  // namespace bsswb
