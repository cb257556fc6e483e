#pragma once

#include "bsswb/codec.hpp"
#include "bsswb/vm.hpp"

namespace bsswb {

/// run(decode_machine(code), ...), step counts included.
RunOutcome universal_run(const GodelCode& code, const std::vector<FieldElem>& input,
                         std::uint64_t budget, const SignMode& mode = SymbolicInfinite{},
                         const Oracle* oracle = nullptr);

/// Code for y -> universal_run(code, prefix ++ y). Rational prefix entries
/// go into the control; each other entry costs one payload slot.
GodelCode smn_curry(const GodelCode& code, const std::vector<FieldElem>& prefix);

/// Code x with universal_run(x, y) = universal_run(f(x), y), where f is the
/// map computed by `transformer` on codes. The transformer must be a plain
/// machine (no SELF/DELEGATE); it is run once on x to check that it halts
/// within `budget`, else Error(BudgetExhausted).
GodelCode fixed_point(const Program& transformer, std::uint64_t budget);

/// A code whose run on the empty input outputs that code.
GodelCode make_quine();

}  // namespace bsswb
