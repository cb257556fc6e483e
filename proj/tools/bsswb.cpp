// bsswb: command-line workbench for the BSS machine, Godel codes and the
// transcendence-degree toolkit. Output is key=value text; exit codes are
// 0 success, 1 fault or library error, 2 usage error, 3 budget exhausted.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsswb/bsswb.hpp"

using namespace bsswb;

namespace {

#ifndef BSSWB_CORPUS_DIR
#define BSSWB_CORPUS_DIR "corpus"
#endif

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto flag_value(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    throw UsageError("invalid " + flag + ": " + e.what());
  }
}

std::vector<FieldElem> elems_flag(const std::string& flag, const std::string& text) {
  return flag_value(flag, [&] { return parse_field_elem_list(text); });
}

Rat rat_flag(const std::string& flag, const std::string& text) {
  return flag_value(flag, [&] {
    RatFunc f = parse_ratfunc(text, 0);
    return f.constant_value();
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// `[...]` is code text; anything else is a program file.
GodelCode code_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return flag_value("code", [&] { return parse_godel_code(arg); });
  return encode_machine(parse_program(read_file(arg)), DummyPolicy::Allow);
}

SignMode sign_mode(const std::string& mode, const std::string& bind) {
  if (mode == "symbolic") {
    if (!bind.empty()) throw UsageError("--bind requires --sign-mode numeric");
    return SymbolicInfinite{};
  }
  NumericBinding nb;
  if (bind.empty()) return nb;
  for (auto part : split_top_level(bind, ',')) {
    std::string item(part);
    auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 3 || item[0] != 'T')
      throw UsageError("invalid --bind: expected Ti=value, got `" + item + "`");
    unsigned idx = 0;
    try {
      idx = static_cast<unsigned>(std::stoul(item.substr(1, eq - 1)));
    } catch (const std::exception&) {
      throw UsageError("invalid --bind: bad symbol in `" + item + "`");
    }
    if (idx == 0) throw UsageError("invalid --bind: symbols start at T1");
    std::string value = item.substr(eq + 1);
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    IntervalOracle o;
    if (value == "e") o = oracle_e();
    else if (value == "pi") o = oracle_pi();
    else o = oracle_rational(rat_flag("--bind", value));
    if (nb.oracles.size() < idx) nb.oracles.resize(idx);
    nb.oracles[idx - 1] = o;
  }
  for (std::size_t i = 0; i < nb.oracles.size(); ++i)
    if (!nb.oracles[i]) throw UsageError("invalid --bind: T" + std::to_string(i + 1) + " is not bound");
  return nb;
}

Oracle oracle_flag(const std::string& arg) {
  if (arg == "iz") return iz_oracle({});
  if (arg.rfind("iz:", 0) == 0) return iz_oracle(elems_flag("--oracle", arg.substr(3)));
  throw UsageError("invalid --oracle: expected iz or iz:<context>");
}

int outcome_exit(const RunOutcome& r) {
  if (std::holds_alternative<Output>(r)) return 0;
  if (std::holds_alternative<Exhausted>(r)) return 3;
  return 1;
}

std::uint64_t step_count(const RunOutcome& r) {
  return std::visit([](const auto& v) { return v.steps; }, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BSS machine workbench"};
  app.require_subcommand(1);
  std::function<int()> action;

  // run
  std::string prog_path, input, mode = "symbolic", bind, oracle_arg;
  std::uint64_t budget = 10000;
  bool show_steps = false;
  auto* run_cmd = app.add_subcommand("run", "Run a program on an input");
  run_cmd->add_option("program", prog_path, "Program file (.bss)")->required();
  run_cmd->add_option("--input", input, "Comma-separated inputs");
  run_cmd->add_option("--budget", budget, "Step budget")->check(CLI::PositiveNumber);
  run_cmd->add_option("--sign-mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  run_cmd->add_option("--bind", bind, "Numeric bindings, e.g. T1=e,T2=pi,T3=1/2");
  run_cmd->add_option("--oracle", oracle_arg, "iz or iz:<context> (default iz for oracle machines)");
  run_cmd->add_flag("--steps", show_steps, "Also print the step count");
  run_cmd->callback([&] {
    action = [&] {
      Program p = parse_program(read_file(prog_path));
      auto in = elems_flag("--input", input);
      SignMode sm = sign_mode(mode, bind);
      Oracle o;
      if (!oracle_arg.empty()) o = oracle_flag(oracle_arg);
      else if (p.oracle) o = iz_oracle({});
      auto r = run(p, in, budget, sm, o ? &o : nullptr);
      std::cout << to_string(r) << "\n";
      if (show_steps) std::cout << "steps=" << step_count(r) << "\n";
      return outcome_exit(r);
    };
  });

  // encode / decode
  bool allow_dummy = false;
  auto* enc = app.add_subcommand("encode", "Print the Godel code of a program");
  enc->add_option("program", prog_path, "Program file (.bss)")->required();
  enc->add_flag("--allow-dummy", allow_dummy, "Insert a dummy rational first constant when needed");
  enc->callback([&] {
    action = [&] {
      auto code = encode_machine(parse_program(read_file(prog_path)),
                                 allow_dummy ? DummyPolicy::Allow : DummyPolicy::Forbid);
      std::cout << to_string(code) << "\n";
      return 0;
    };
  });
  std::string code_text;
  auto* dec = app.add_subcommand("decode", "Print the program of a Godel code");
  dec->add_option("code", code_text, "Bracketed code, e.g. [3073/4, T1]")->required();
  dec->callback([&] {
    action = [&] {
      std::cout << print_program(decode_machine(flag_value("code", [&] { return parse_godel_code(code_text); })));
      return 0;
    };
  });

  // pair / unpair
  std::string n_text, x_text, z_text;
  auto* pr = app.add_subcommand("pair", "Pair a natural number with a rational");
  pr->add_option("--n", n_text, "Natural number")->required();
  pr->add_option("--x", x_text, "Rational")->required();
  pr->callback([&] {
    action = [&] {
      BigInt n;
      if (n_text.empty() || n.set_str(n_text, 10) != 0 || n < 0) throw UsageError("invalid --n: `" + n_text + "`");
      std::cout << pair(n, rat_flag("--x", x_text)).get_str() << "\n";
      return 0;
    };
  });
  auto* upr = app.add_subcommand("unpair", "Invert the pairing");
  upr->add_option("--z", z_text, "Rational code")->required();
  upr->callback([&] {
    action = [&] {
      auto [n, x] = unpair(rat_flag("--z", z_text));
      std::cout << "n=" << n.get_str() << "\nx=" << x.get_str() << "\n";
      return 0;
    };
  });

  // trdeg / kd / ko / depsearch / ismember
  std::string elems_text, context_text, method = "jacobian";
  unsigned deg = 4, height = 3, k = 0;
  bool have_k = false;
  auto vec = [&] { return Vec{elems_flag("--elems", elems_text), elems_flag("--context", context_text)}; };
  auto* td = app.add_subcommand("trdeg", "Transcendence degree over Q(context)");
  td->add_option("--elems", elems_text, "Comma-separated elements")->required();
  td->add_option("--context", context_text, "Comma-separated context");
  td->add_option("--method", method, "jacobian or rank-formula")->check(CLI::IsMember({"jacobian", "rank-formula"}));
  td->callback([&] {
    action = [&] {
      Vec v = vec();
      std::cout << to_string(method == "jacobian" ? trdeg(v, Over::Context) : max_independent_subset(v)) << "\n";
      return 0;
    };
  });
  auto* kd = app.add_subcommand("kd", "K^d complexity");
  kd->add_option("--elems", elems_text, "Comma-separated elements")->required();
  kd->add_option("--context", context_text, "Comma-separated context");
  kd->callback([&] {
    action = [&] {
      unsigned value = kd_complexity(vec());
      std::cout << "kd=" << value << "\n";
      return 0;
    };
  });
  auto* ko = app.add_subcommand("ko", "K^o bounds");
  ko->add_option("--elems", elems_text, "Comma-separated elements")->required();
  ko->add_option("--context", context_text, "Comma-separated context");
  ko->callback([&] {
    action = [&] {
      std::cout << to_string(ko_bounds(vec())) << "\n";
      return 0;
    };
  });
  auto* ds = app.add_subcommand("depsearch", "Search an integer polynomial relation");
  ds->add_option("--elems", elems_text, "Comma-separated elements")->required();
  ds->add_option("--deg", deg, "Total degree bound")->check(CLI::PositiveNumber);
  ds->add_option("--height", height, "Coefficient height bound")->check(CLI::PositiveNumber);
  ds->callback([&] {
    action = [&] {
      auto w = find_dependence(Vec{elems_flag("--elems", elems_text), {}}, deg, height);
      std::cout << "witness=" << (w ? witness_string(w->poly) : "none") << "\n";
      return 0;
    };
  });
  auto* im = app.add_subcommand("ismember", "Kolmogorov set membership (with --k) or I_context membership");
  im->add_option("--elems", elems_text, "Comma-separated elements");
  im->add_option("--context", context_text, "Comma-separated context");
  im->add_option("--k", k, "Complexity bound")->each([&](const std::string&) { have_k = true; });
  im->callback([&] {
    action = [&] {
      Vec v = vec();
      if (have_k) std::cout << "member=" << (kolmogorov_set_member(v, k) ? "true" : "false") << "\n";
      else std::cout << "independent=" << (iz_oracle(v.context)(v.elems) ? "true" : "false") << "\n";
      return 0;
    };
  });

  // quine / smn
  auto* qn = app.add_subcommand("quine", "Print a self-reproducing code");
  qn->callback([&] {
    action = [&] {
      std::cout << to_string(make_quine()) << "\n";
      return 0;
    };
  });
  std::string prefix_text;
  auto* smn = app.add_subcommand("smn", "Curry a code or program file with a prefix");
  smn->add_option("code", code_text, "Bracketed code or program file")->required();
  smn->add_option("--prefix", prefix_text, "Comma-separated prefix")->required();
  smn->callback([&] {
    action = [&] {
      std::cout << to_string(smn_curry(code_argument(code_text), elems_flag("--prefix", prefix_text))) << "\n";
      return 0;
    };
  });

  // cantor
  std::string q_text;
  unsigned depth = 8;
  auto* ct = app.add_subcommand("cantor", "Middle-third exclusion test");
  ct->add_option("--q", q_text, "Rational in [0, 1]")->required();
  ct->add_option("--depth", depth, "Levels to examine");
  ct->callback([&] {
    action = [&] {
      Rat q = rat_flag("--q", q_text);
      if (q < 0 || q > 1) throw UsageError("invalid --q: must lie in [0, 1]");
      if (depth < 1) throw UsageError("invalid --depth: must be at least 1");
      std::cout << to_string(cantor_member_depth(q, depth)) << "\n";
      return 0;
    };
  });

  // corpus
  std::string dir = BSSWB_CORPUS_DIR;
  auto* cp = app.add_subcommand("corpus", "Check every corpus program against its expectations");
  cp->add_option("--dir", dir, "Corpus directory");
  cp->callback([&] {
    action = [&] {
      int bad = 0;
      for (const auto& e : load_corpus(dir)) {
        auto code = encode_machine(e.program);
        bool round = decode_machine(code) == e.program;
        if (!round) ++bad;
        std::cout << e.name << " roundtrip=" << (round ? "ok" : "FAIL") << " size=" << code.size() << "\n";
        for (const auto& c : e.cases) {
          std::string want = expected_outcome(e.program, c), got = actual_outcome(e.program, c);
          bool ok = want == got;
          if (!ok) ++bad;
          std::cout << e.name << " " << to_string(c.input) << " budget=" << c.budget << " "
                    << (ok ? "ok" : "FAIL got=" + got) << "\n";
        }
      }
      std::cout << "failures=" << bad << "\n";
      return bad ? 1 : 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << "error=" << to_string(e.code()) << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  }
}
