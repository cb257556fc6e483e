#include "bsswb/vm.hpp"

#include "bsswb/codec.hpp"
#include "bsswb/error.hpp"

namespace bsswb {

namespace {

const FieldElem kZero{};

std::optional<RatFunc> combine(Action::Kind k, const RatFunc& y, const RatFunc& x) {
  switch (k) {
    case Action::Kind::Add: return y + x;
    case Action::Kind::Sub: return y - x;
    case Action::Kind::Mul: return y * x;
    case Action::Kind::Div:
      if (x.is_zero()) return std::nullopt;
      return y / x;
    default: return x;
  }
}

bool move(std::size_t& pos, Dir d) {
  if (d == Dir::L) {
    if (pos == 0) return false;
    --pos;
  } else {
    ++pos;
  }
  return true;
}

void store(std::map<std::size_t, FieldElem>& tape, std::size_t i, FieldElem v) {
  if (v.is_zero())
    tape.erase(i);
  else
    tape[i] = std::move(v);
}

RunOutcome shift_steps(RunOutcome r, std::uint64_t by) {
  std::visit([by](auto& o) { o.steps += by; }, r);
  return r;
}

}  // namespace

const FieldElem& MachineConfig::cell(std::size_t i) const {
  auto it = tape.find(i);
  return it == tape.end() ? kZero : it->second;
}

const char* to_string(FaultReason r) noexcept {
  switch (r) {
    case FaultReason::DivisionByZero: return "DivisionByZero";
    case FaultReason::MalformedOutput: return "MalformedOutput";
    case FaultReason::HeadUnderflow: return "HeadUnderflow";
    case FaultReason::UnsupportedOrder: return "UnsupportedOrder";
  }
  return "?";
}

MachineConfig initial_config(const std::vector<FieldElem>& input) {
  MachineConfig cfg;
  store(cfg.tape, 0, FieldElem(static_cast<long>(input.size())));
  for (std::size_t i = 0; i < input.size(); ++i) store(cfg.tape, i + 1, input[i]);
  return cfg;
}

StepResult step(MachineConfig& cfg, const Program& prog, const SignMode& mode, const Oracle* oracle) {
  using K = Action::Kind;
  const FieldElem& x = cfg.cell(cfg.read_pos);
  int s;
  try {
    s = sign(x, mode);
  } catch (const Error& e) {
    if (e.code() != Errc::UnsupportedOrder) throw;
    return Fault{FaultReason::UnsupportedOrder, cfg.steps, e.what()};
  }
  const Transition& tr = prog.states.at(cfg.state).on[s + 1];
  const Action& a = tr.action;
  ++cfg.steps;
  std::size_t next = tr.next;
  switch (a.kind) {
    case K::Halt: return Halted{};
    case K::Copy: store(cfg.tape, cfg.write_pos, x); break;
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      const FieldElem& y = cfg.cell(cfg.write_pos);
      if (x.is_alg() || y.is_alg())
        return Fault{FaultReason::UnsupportedOrder, cfg.steps,
                     "arithmetic on declared-algebraic values leaves the carrier field"};
      auto r = combine(a.kind, y.func(), x.func());
      if (!r) return Fault{FaultReason::DivisionByZero, cfg.steps, "division by a zero cell"};
      store(cfg.tape, cfg.write_pos, std::move(*r));
      break;
    }
    case K::Const: store(cfg.tape, cfg.write_pos, prog.constants.at(a.slot - 1)); break;
    case K::MoveRead:
    case K::MoveWrite:
    case K::MoveQuery: {
      std::size_t& pos = a.kind == K::MoveRead ? cfg.read_pos
                         : a.kind == K::MoveWrite ? cfg.write_pos
                                                  : cfg.query_pos;
      if (!move(pos, a.dir)) return Fault{FaultReason::HeadUnderflow, cfg.steps, "head moved left of cell 0"};
      break;
    }
    case K::QWrite:
      store(cfg.query_tape, cfg.query_pos, x);
      cfg.query_extent = std::max(cfg.query_extent, cfg.query_pos + 1);
      break;
    case K::Query: {
      if (!oracle) throw Error(Errc::InvalidArgument, "oracle machine run without an oracle");
      std::vector<FieldElem> q;
      for (std::size_t i = 0; i < cfg.query_extent; ++i) {
        auto it = cfg.query_tape.find(i);
        q.push_back(it == cfg.query_tape.end() ? kZero : it->second);
      }
      if (!(*oracle)(q)) next = tr.next_no;
      break;
    }
  }
  cfg.state = next;
  return Running{};
}

RunOutcome run(const Program& prog, const std::vector<FieldElem>& input, std::uint64_t budget,
               const SignMode& mode, const Oracle* oracle) {
  if (budget == 0) throw Error(Errc::InvalidArgument, "budget must be at least 1");
  if (prog.oracle && !oracle) throw Error(Errc::InvalidArgument, "oracle machine run without an oracle");
  std::vector<FieldElem> args;
  for (const auto& item : prog.prefix)
    args.push_back(item.value ? FieldElem(*item.value) : prog.constants.at(item.slot - 1));
  args.insert(args.end(), input.begin(), input.end());
  if (prog.empty()) {
    if (args.empty()) return Output{{}, 0};
    return Exhausted{budget};
  }
  std::vector<FieldElem> body_input;
  if (prog.self_reference) body_input = encode_machine(prog, DummyPolicy::Allow).payload;
  if (!prog.delegate) body_input.insert(body_input.end(), args.begin(), args.end());

  MachineConfig cfg = initial_config(body_input);
  while (cfg.steps < budget) {
    StepResult r = step(cfg, prog, mode, oracle);
    if (auto* f = std::get_if<Fault>(&r)) return *f;
    if (std::holds_alternative<Running>(r)) continue;
    const FieldElem& m = cfg.cell(0);
    if (!m.is_rational() || !is_integer(m.rational_value()) || m.rational_value() < 0)
      return Fault{FaultReason::MalformedOutput, cfg.steps, "cell 0 is not a nonnegative integer"};
    BigInt count = m.rational_value().get_num();
    if (count > 10'000'000)
      return Fault{FaultReason::MalformedOutput, cfg.steps, "announced output length is unreasonably large"};
    Output out{{}, cfg.steps};
    for (BigInt i = 1; i <= count; ++i) out.values.push_back(cfg.cell(i.get_ui()));
    if (!prog.delegate) return out;
    Program target;
    try {
      target = decode_machine(GodelCode{out.values});
    } catch (const Error& e) {
      return Fault{FaultReason::MalformedOutput, cfg.steps, std::string("delegated code: ") + e.what()};
    }
    if (cfg.steps >= budget) return Exhausted{budget};
    return shift_steps(run(target, args, budget - cfg.steps, mode, oracle), cfg.steps);
  }
  return Exhausted{budget};
}

std::string to_string(const RunOutcome& r) {
  if (auto* o = std::get_if<Output>(&r)) return "output=" + to_string(o->values);
  if (std::holds_alternative<Exhausted>(r)) return "budget-exhausted";
  return std::string("fault=") + to_string(std::get<Fault>(r).reason);
}

std::string describe(const RunOutcome& r) {
  std::uint64_t steps = std::visit([](const auto& o) { return o.steps; }, r);
  return to_string(r) + " steps=" + std::to_string(steps);
}

}  // namespace bsswb
