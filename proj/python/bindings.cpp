// Python bindings. Field elements cross the boundary as canonical strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsswb/bsswb.hpp"

namespace py = pybind11;
using namespace bsswb;

namespace {

std::vector<FieldElem> elems(const std::vector<std::string>& xs) {
  std::vector<FieldElem> out;
  for (const auto& x : xs) out.push_back(parse_field_elem(x));
  return out;
}

std::vector<std::string> strings(const std::vector<FieldElem>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

GodelCode code_of(const std::vector<std::string>& payload) { return GodelCode{elems(payload)}; }

SignMode sign_mode(const std::string& mode, const std::map<unsigned, std::string>& bind) {
  if (mode == "symbolic") return SymbolicInfinite{};
  if (mode != "numeric") throw Error(Errc::InvalidArgument, "sign mode must be 'symbolic' or 'numeric'");
  NumericBinding nb;
  for (const auto& [i, v] : bind) {
    if (i == 0) throw Error(Errc::InvalidArgument, "symbols start at T1");
    if (nb.oracles.size() < i) nb.oracles.resize(i);
    nb.oracles[i - 1] = v == "e" ? oracle_e() : v == "pi" ? oracle_pi() : oracle_rational(parse_ratfunc(v, 0).constant_value());
  }
  return nb;
}

py::dict outcome(const RunOutcome& r) {
  py::dict d;
  d["text"] = to_string(r);
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        d["steps"] = v.steps;
        if constexpr (std::is_same_v<V, Output>) {
          d["kind"] = "output";
          d["values"] = strings(v.values);
        } else if constexpr (std::is_same_v<V, Exhausted>) {
          d["kind"] = "budget-exhausted";
        } else {
          d["kind"] = "fault";
          d["reason"] = to_string(v.reason);
        }
      },
      r);
  return d;
}

py::dict trdeg_dict(const TrdegReport& r) {
  py::dict d;
  d["trdeg"] = r.trdeg;
  d["basis"] = r.basis;
  d["method"] = to_string(r.method);
  d["text"] = to_string(r);
  return d;
}

RunOutcome run_with(const Program& p, const std::vector<std::string>& input, std::uint64_t budget,
                    const std::string& mode, const std::map<unsigned, std::string>& bind,
                    const std::optional<std::vector<std::string>>& iz_context, bool universal,
                    const GodelCode* code) {
  Oracle o;
  if (iz_context) o = iz_oracle(elems(*iz_context));
  else if (p.oracle) o = iz_oracle({});
  SignMode sm = sign_mode(mode, bind);
  if (universal) return universal_run(*code, elems(input), budget, sm, o ? &o : nullptr);
  return run(p, elems(input), budget, sm, o ? &o : nullptr);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "BSS machine workbench";
  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("canonical", [](const std::string& x) { return to_string(parse_field_elem(x)); });
  m.def("parse_program", [](const std::string& text) { return print_program(parse_program(text)); },
        "Parse and reprint a program in canonical form.");
  m.def(
      "run",
      [](const std::string& program, const std::vector<std::string>& input, std::uint64_t budget,
         const std::string& sign_mode, const std::map<unsigned, std::string>& bind,
         const std::optional<std::vector<std::string>>& oracle_context) {
        Program p = parse_program(program);
        return outcome(run_with(p, input, budget, sign_mode, bind, oracle_context, false, nullptr));
      },
      py::arg("program"), py::arg("input") = std::vector<std::string>{}, py::arg("budget") = 10000,
      py::arg("sign_mode") = "symbolic", py::arg("bind") = std::map<unsigned, std::string>{},
      py::arg("oracle_context") = py::none());
  m.def(
      "universal_run",
      [](const std::vector<std::string>& code, const std::vector<std::string>& input, std::uint64_t budget) {
        GodelCode c = code_of(code);
        return outcome(universal_run(c, elems(input), budget, SymbolicInfinite{}, nullptr));
      },
      py::arg("code"), py::arg("input") = std::vector<std::string>{}, py::arg("budget") = 10000);
  m.def(
      "encode",
      [](const std::string& program, bool allow_dummy) {
        return strings(encode_machine(parse_program(program), allow_dummy ? DummyPolicy::Allow : DummyPolicy::Forbid).payload);
      },
      py::arg("program"), py::arg("allow_dummy") = false);
  m.def("decode", [](const std::vector<std::string>& code) { return print_program(decode_machine(code_of(code))); });
  m.def("pair", [](const py::int_& n, const std::string& x) {
    return pair(BigInt(py::str(n).cast<std::string>()), parse_ratfunc(x, 0).constant_value()).get_str();
  });
  m.def("unpair", [](const std::string& z) {
    auto [n, x] = unpair(parse_ratfunc(z, 0).constant_value());
    return py::make_tuple(py::int_(py::str(n.get_str())), x.get_str());
  });
  m.def("smn_curry", [](const std::vector<std::string>& code, const std::vector<std::string>& prefix) {
    return strings(smn_curry(code_of(code), elems(prefix)).payload);
  });
  m.def("make_quine", [] { return strings(make_quine().payload); });

  m.def(
      "trdeg", [](const std::vector<std::string>& e, const std::vector<std::string>& c) {
        return trdeg_dict(trdeg(Vec{elems(e), elems(c)}, Over::Context));
      },
      py::arg("elems"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "max_independent_subset", [](const std::vector<std::string>& e, const std::vector<std::string>& c) {
        return trdeg_dict(max_independent_subset(Vec{elems(e), elems(c)}));
      },
      py::arg("elems"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "independent", [](const std::vector<std::string>& e, const std::vector<std::string>& c) {
        return algebraically_independent(Vec{elems(e), elems(c)}, Over::Context);
      },
      py::arg("elems"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "kd", [](const std::vector<std::string>& e, const std::vector<std::string>& c) {
        return kd_complexity(Vec{elems(e), elems(c)});
      },
      py::arg("elems"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "ko", [](const std::vector<std::string>& e, const std::vector<std::string>& c) {
        auto r = ko_bounds(Vec{elems(e), elems(c)});
        py::dict d;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["exact"] = r.exact ? py::object(py::int_(*r.exact)) : py::object(py::none());
        d["certificate"] = r.certificate;
        d["text"] = to_string(r);
        return d;
      },
      py::arg("elems"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "kolmogorov_set_member",
      [](const std::vector<std::string>& e, unsigned k, const std::vector<std::string>& c) {
        return kolmogorov_set_member(Vec{elems(e), elems(c)}, k);
      },
      py::arg("elems"), py::arg("k"), py::arg("context") = std::vector<std::string>{});
  m.def(
      "find_dependence",
      [](const std::vector<std::string>& e, unsigned deg, unsigned height) -> std::optional<std::string> {
        auto w = find_dependence(Vec{elems(e), {}}, deg, height);
        if (!w) return std::nullopt;
        return witness_string(w->poly);
      },
      py::arg("elems"), py::arg("degree_bound"), py::arg("height_bound"));
  m.def("cantor_member_depth", [](const std::string& q, unsigned depth) {
    return to_string(cantor_member_depth(parse_ratfunc(q, 0).constant_value(), depth));
  });
  m.def("cantor_program", [] { return print_program(cantor_program()); });
  m.def("poly_irreducible", [](const std::string& p) { return poly_irreducible_Z(parse_ratfunc(p).num()); },
        "Irreducibility in Z[T1..Tm] of an integer polynomial given in expression syntax.");
}
