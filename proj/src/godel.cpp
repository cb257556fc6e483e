#include "bsswb/godel.hpp"

#include "bsswb/error.hpp"

namespace bsswb {

RunOutcome universal_run(const GodelCode& code, const std::vector<FieldElem>& input,
                         std::uint64_t budget, const SignMode& mode, const Oracle* oracle) {
  return run(decode_machine(code), input, budget, mode, oracle);
}

GodelCode smn_curry(const GodelCode& code, const std::vector<FieldElem>& prefix) {
  Program p = decode_machine(code);
  for (const auto& x : prefix) {
    if (x.is_rational()) {
      p.prefix.push_back(PrefixItem{x.rational_value(), 0});
    } else {
      p.constants.push_back(x);
      p.prefix.push_back(PrefixItem{std::nullopt, static_cast<unsigned>(p.constants.size())});
      p.symbols = std::max<unsigned>(p.symbols, static_cast<unsigned>(x.nvars()));
    }
  }
  return encode_machine(p, DummyPolicy::Allow);
}

GodelCode fixed_point(const Program& transformer, std::uint64_t budget) {
  if (transformer.self_reference || transformer.delegate)
    throw Error(Errc::InvalidArgument, "transformer must not use SELF or DELEGATE");
  if (transformer.empty()) throw Error(Errc::InvalidArgument, "transformer is the empty program");
  Program x = transformer;
  x.self_reference = true;
  x.delegate = true;
  GodelCode code = encode_machine(x, DummyPolicy::Allow);
  RunOutcome image = run(transformer, code.payload, budget);
  if (std::holds_alternative<Exhausted>(image))
    throw Error(Errc::BudgetExhausted, "transformer did not halt within the budget");
  if (auto* f = std::get_if<Fault>(&image))
    throw Error(Errc::InvalidArgument, std::string("transformer faulted: ") + to_string(f->reason));
  return code;
}

GodelCode make_quine() {
  Program q;
  q.self_reference = true;
  State s{"q0", {}};
  for (auto& t : s.on) t.action.kind = Action::Kind::Halt;
  q.states.push_back(s);
  return encode_machine(q, DummyPolicy::Allow);
}

}  // namespace bsswb
