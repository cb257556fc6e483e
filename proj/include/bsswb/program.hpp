#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsswb/field_elem.hpp"

namespace bsswb {

enum class Dir { L, R };

struct Action {
  enum class Kind { Copy, Add, Sub, Mul, Div, Const, MoveRead, MoveWrite, MoveQuery, QWrite, Halt, Query };
  Kind kind = Kind::Halt;
  unsigned slot = 0;  // Const: 1-based constant index
  Dir dir = Dir::R;   // head moves

  friend bool operator==(const Action&, const Action&) = default;
};

/// Successor indices into Program::states. Query uses `next` for yes and
/// `next_no` for no; Halt uses neither.
struct Transition {
  Action action;
  std::size_t next = 0;
  std::size_t next_no = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Transitions indexed by sign + 1 (NEG, ZERO, POS).
struct State {
  std::string name;
  std::array<Transition, 3> on;

  friend bool operator==(const State&, const State&) = default;
};

/// Curried argument: a rational folded into the control, or a constant slot.
struct PrefixItem {
  std::optional<Rat> value;
  unsigned slot = 0;

  friend bool operator==(const PrefixItem&, const PrefixItem&) = default;
};

struct Program {
  unsigned symbols = 0;
  bool oracle = false;
  /// The machine's own Godel code is placed before its arguments.
  bool self_reference = false;
  /// The machine's output is taken as a Godel code and run on the arguments.
  bool delegate = false;
  std::vector<FieldElem> constants;
  std::vector<PrefixItem> prefix;
  std::vector<State> states;  // states[0] is the start state

  bool empty() const noexcept { return states.empty(); }
  friend bool operator==(const Program&, const Program&) = default;
};

/// Throws Error(SyntaxError | MissingTransition | UnknownState | BadConstIndex)
/// with line and column.
Program parse_program(std::string_view text);

/// Canonical program text; parse_program(print_program(p)) == p.
std::string print_program(const Program& p);

/// Control text: the program with its constant values stripped, recording
/// only their number (`CONSTS J`) and, if set, `DUMMY on`.
std::string print_control(const Program& p, bool dummy = false);

struct ControlText {
  Program program;  // constants left empty
  unsigned nconsts = 0;
  bool dummy = false;
};

ControlText parse_control(std::string_view text);

std::string to_string(const Action& a);

}  // namespace bsswb
