#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bsswb/program.hpp"
#include "bsswb/sign.hpp"

namespace bsswb {

/// Decision callback for oracle machines; must be pure.
using Oracle = std::function<bool(const std::vector<FieldElem>&)>;

struct MachineConfig {
  std::map<std::size_t, FieldElem> tape;  // absent cells hold 0
  std::map<std::size_t, FieldElem> query_tape;
  std::size_t read_pos = 0, write_pos = 0, query_pos = 0;
  std::size_t query_extent = 0;  // one past the highest written query cell
  std::size_t state = 0;
  std::uint64_t steps = 0;

  const FieldElem& cell(std::size_t i) const;
};

enum class FaultReason { DivisionByZero, MalformedOutput, HeadUnderflow, UnsupportedOrder };
const char* to_string(FaultReason r) noexcept;

struct Output {
  std::vector<FieldElem> values;
  std::uint64_t steps = 0;
};
struct Exhausted {
  std::uint64_t steps = 0;
};
struct Fault {
  FaultReason reason;
  std::uint64_t steps = 0;
  std::string detail;
};
using RunOutcome = std::variant<Output, Exhausted, Fault>;

struct Running {};
struct Halted {};
using StepResult = std::variant<Running, Halted, Fault>;

/// Tape (n, x1, ..., xn), all heads at 0, start state.
MachineConfig initial_config(const std::vector<FieldElem>& input);

/// Applies exactly one action. A Query without an oracle throws
/// Error(InvalidArgument).
StepResult step(MachineConfig& cfg, const Program& prog, const SignMode& mode, const Oracle* oracle);

/// Runs for at most `budget` steps (budget >= 1). Arguments seen by the
/// machine body are [own code if SELF] ++ prefix ++ input; with DELEGATE the
/// body sees only its own code and its output is run as a code on
/// prefix ++ input within the remaining budget.
RunOutcome run(const Program& prog, const std::vector<FieldElem>& input, std::uint64_t budget,
               const SignMode& mode = SymbolicInfinite{}, const Oracle* oracle = nullptr);

/// Deterministic text: `output=[...]`, `budget-exhausted`, `fault=Reason`.
std::string to_string(const RunOutcome& r);
/// As to_string plus ` steps=N`.
std::string describe(const RunOutcome& r);

}  // namespace bsswb
