#include <random>

#include "bsswb/codec.hpp"
#include "bsswb/corpus.hpp"
#include "bsswb/error.hpp"
#include "bsswb/expr.hpp"
#include "bsswb/godel.hpp"
#include "bsswb/transcend.hpp"
#include "doctest.h"

using namespace bsswb;

namespace {

std::vector<FieldElem> L(const char* s) { return parse_field_elem_list(s); }

const std::vector<CorpusEntry>& corpus() {
  static const auto c = load_corpus(BSSWB_CORPUS_DIR);
  return c;
}

const Program& corpus_program(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.program;
  throw std::runtime_error("missing corpus program " + name);
}

Errc error_code(const char* text) {
  try {
    parse_program(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::InvalidArgument;
}

// Transformer that ignores its input and outputs (c) where c = code[0].
Program constant_transformer(const GodelCode& target) {
  REQUIRE(target.size() == 1);
  std::string text = "CONST 1 = " + to_string(target.payload[0]) + "\nCONST 2 = 1\n" +
                     "STATE a:\n  NEG -> CONST 2, b\n  ZERO -> CONST 2, b\n  POS -> CONST 2, b\n"
                     "STATE b:\n  NEG -> MOVEW R, c\n  ZERO -> MOVEW R, c\n  POS -> MOVEW R, c\n"
                     "STATE c:\n  NEG -> CONST 1, d\n  ZERO -> CONST 1, d\n  POS -> CONST 1, d\n"
                     "STATE d:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n";
  return parse_program(text);
}

}  // namespace

TEST_CASE("program parsing") {
  CHECK(corpus_program("identity").states.size() == 4);
  CHECK(error_code("STATE a:\n  NEG -> HALT\n  POS -> HALT\n") == Errc::MissingTransition);
  CHECK(error_code("CONST 1 = T1\nSTATE a:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n") ==
        Errc::SyntaxError);
  CHECK(error_code("STATE a:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> COPY, b\n") == Errc::UnknownState);
  CHECK(error_code("STATE a:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> CONST 1, a\n") == Errc::BadConstIndex);
  CHECK(error_code("STATE a:\n  NEG -> QUERY, a, a\n  ZERO -> HALT\n  POS -> HALT\n") == Errc::SyntaxError);
  CHECK(error_code("STATE a:\n  NEG -> JUMP\n  ZERO -> HALT\n  POS -> HALT\n") == Errc::SyntaxError);
  try {
    parse_program("# c\nSTATE a:\n  NEG -> HALT\n  POS -> HALT\n");
  } catch (const Error& e) {
    CHECK(e.line() == 2);
  }
  for (const auto& e : corpus()) CHECK(parse_program(print_program(e.program)) == e.program);
}

TEST_CASE("single steps") {
  Program p = parse_program(
      "STATE q0:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n");
  MachineConfig cfg = initial_config(L("5"));
  cfg.read_pos = 1;
  CHECK(std::holds_alternative<Halted>(step(cfg, p, SymbolicInfinite{}, nullptr)));
  CHECK(cfg.steps == 1);

  Program d = parse_program(
      "STATE q0:\n  NEG -> DIV, q0\n  ZERO -> DIV, q0\n  POS -> DIV, q0\n");
  MachineConfig c2 = initial_config({});
  auto r = step(c2, d, SymbolicInfinite{}, nullptr);
  REQUIRE(std::holds_alternative<Fault>(r));
  CHECK(std::get<Fault>(r).reason == FaultReason::DivisionByZero);

  Program u = parse_program("STATE q0:\n  NEG -> MOVER L, q0\n  ZERO -> MOVER L, q0\n  POS -> MOVER L, q0\n");
  CHECK(to_string(run(u, {}, 10)) == "fault=HeadUnderflow");

  // Query with the I_() oracle: yes branch for (T1)
  Program q = parse_program(
      "ORACLE on\nCONST 1 = 7\nSTATE s:\n  NEG -> MOVER R, w\n  ZERO -> MOVER R, w\n  POS -> MOVER R, w\n"
      "STATE w:\n  NEG -> QWRITE, a\n  ZERO -> QWRITE, a\n  POS -> QWRITE, a\n"
      "STATE a:\n  NEG -> QUERY, y, n\n  ZERO -> QUERY, y, n\n  POS -> QUERY, y, n\n"
      "STATE y:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n"
      "STATE n:\n  NEG -> CONST 1, y\n  ZERO -> CONST 1, y\n  POS -> CONST 1, y\n");
  Oracle iz = iz_oracle({});
  CHECK(to_string(run(q, L("T1"), 100, SymbolicInfinite{}, &iz)) == "output=[T1]");
  // the no branch overwrites cell 0 with 7
  CHECK(to_string(run(q, L("2"), 100, SymbolicInfinite{}, &iz)) == "output=[2, 0, 0, 0, 0, 0, 0]");
  CHECK_THROWS_AS(run(q, L("2"), 100), Error);
  CHECK_THROWS_AS(run(p, {}, 0), Error);
}

TEST_CASE("run examples") {
  CHECK(to_string(run(corpus_program("identity"), L("5"), 1000)) == "output=[5]");
  auto loop = run(corpus_program("loop"), {}, 100);
  REQUIRE(std::holds_alternative<Exhausted>(loop));
  CHECK(std::get<Exhausted>(loop).steps == 100);
  CHECK(to_string(run(corpus_program("square"), L("3/2"), 1000)) == "output=[9/4]");
  // sign of T1 in numeric mode decides the branch just like symbolically
  SignMode numeric = NumericBinding{{oracle_e()}};
  CHECK(to_string(run(corpus_program("square"), L("T1"), 1000, numeric)) == "output=[T1^2]");
}

TEST_CASE("corpus expectations") {
  REQUIRE(corpus().size() == 6);
  for (const auto& e : corpus()) {
    CHECK_FALSE(e.cases.empty());
    for (const auto& c : e.cases) {
      INFO(e.name << " " << to_string(c.input));
      CHECK(actual_outcome(e.program, c) == expected_outcome(e.program, c));
    }
  }
}

TEST_CASE("determinism, budget monotonicity, step counts") {
  Oracle iz = iz_oracle({});
  for (const auto& e : corpus())
    for (const auto& c : e.cases) {
      const Oracle* o = e.program.oracle ? &iz : nullptr;
      auto a = run(e.program, c.input, c.budget, SymbolicInfinite{}, o);
      CHECK(describe(a) == describe(run(e.program, c.input, c.budget, SymbolicInfinite{}, o)));
      if (auto* out = std::get_if<Output>(&a)) {
        for (std::uint64_t b : {out->steps, out->steps + 1, out->steps * 3 + 10})
          CHECK(describe(run(e.program, c.input, b, SymbolicInfinite{}, o)) == describe(a));
        if (out->steps > 1 && !e.program.self_reference)
          CHECK(std::holds_alternative<Exhausted>(run(e.program, c.input, out->steps - 1, SymbolicInfinite{}, o)));
        // conservation of transcendence degree along the run
        std::vector<FieldElem> before = e.program.constants;
        before.insert(before.end(), c.input.begin(), c.input.end());
        auto after = before;
        after.insert(after.end(), out->values.begin(), out->values.end());
        if (!e.program.self_reference) CHECK(trdeg(Vec{after, {}}).trdeg == trdeg(Vec{before, {}}).trdeg);
      }
    }
}

TEST_CASE("pairing") {
  CHECK(pair(0, 0) == 2);
  CHECK(pair(3, Rat(-5, 4)) == Rat(3073, 4));
  CHECK(pair(1, 7) == 120);
  CHECK(unpair(2) == std::pair<BigInt, Rat>(0, 0));
  CHECK(unpair(770) == std::pair<BigInt, Rat>(0, 192));
  CHECK_THROWS_AS(unpair(3), Error);
  CHECK_THROWS_AS(unpair(Rat(1, 2)), Error);
  // oracle: z = 2^m (2a + 1) + f recomputed by hand on a small grid
  for (long n = 0; n <= 4; ++n)
    for (long p = -40; p <= 40; ++p)
      for (long q = 1; q <= 7; ++q) {
        Rat x(p, q);
        long s = p < 0 ? 1 : 0;
        BigInt a = abs(x.get_num()) / x.get_den();
        Rat f = abs(x) - Rat(a);
        Rat z = Rat(BigInt(1) << (2 * n + s + 1)) * Rat(2 * a + 1) + f;
        CHECK(pair(n, x) == z);
        CHECK(unpair(z) == std::pair<BigInt, Rat>(n, x));
      }
  for (long a = 0; a < 30; ++a)
    for (long b = 0; b < 30; ++b) CHECK(cantor_unpair(cantor_pair(a, b)) == std::pair<BigInt, BigInt>(a, b));
}

TEST_CASE("control serialization") {
  Program empty;
  CHECK(serialize_control(empty) == 0);
  for (const auto& e : corpus()) {
    BigInt v = serialize_control(e.program);
    ControlText t = deserialize_control(v);
    CHECK(t.program.states == e.program.states);
    CHECK(t.nconsts == e.program.constants.size());
    CHECK_FALSE(t.dummy);
  }
  Program a = corpus_program("identity"), b = a;
  b.states[1].name = "other";
  CHECK(serialize_control(a) != serialize_control(b));
  CHECK_THROWS_AS(deserialize_control(BigInt(255)), Error);
}

TEST_CASE("encode and decode") {
  auto id = encode_machine(corpus_program("identity"));
  CHECK(id.size() == 1);
  CHECK(decode_machine(id) == corpus_program("identity"));

  Program c = parse_program("SYMBOLS 1\nCONST 1 = 1/2\nCONST 2 = T1\nSTATE a:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n");
  auto code = encode_machine(c);
  CHECK(code.size() == 2);
  CHECK(code.payload[1] == FieldElem(parse_ratfunc("T1")));
  CHECK(decode_machine(code) == c);

  Program t = parse_program("SYMBOLS 1\nCONST 1 = T1\nSTATE a:\n  NEG -> HALT\n  ZERO -> HALT\n  POS -> HALT\n");
  CHECK_THROWS_AS(encode_machine(t), Error);
  auto dummy = encode_machine(t, DummyPolicy::Allow);
  CHECK(dummy.size() == 2);
  CHECK(dummy.payload[1] == FieldElem(parse_ratfunc("T1")));
  CHECK(decode_machine(dummy) == t);

  for (const auto& e : corpus()) {
    auto k = encode_machine(e.program);
    CHECK(k.size() == std::max<std::size_t>(1, e.program.constants.size()));
    CHECK(decode_machine(k) == e.program);
    CHECK(parse_godel_code(to_string(k)) == k);
  }
  CHECK_THROWS_AS(decode_machine(GodelCode{L("3")}), Error);
  CHECK_THROWS_AS(decode_machine(GodelCode{}), Error);
}

TEST_CASE("universal run") {
  Oracle iz = iz_oracle({});
  for (const auto& e : corpus()) {
    auto code = encode_machine(e.program);
    const Oracle* o = e.program.oracle ? &iz : nullptr;
    for (const auto& c : e.cases)
      for (std::uint64_t b : {10, 100, 10000})
        CHECK(describe(universal_run(code, c.input, b, SymbolicInfinite{}, o)) ==
              describe(run(e.program, c.input, b, SymbolicInfinite{}, o)));
  }
  auto empty = encode_machine(Program{});
  CHECK(to_string(universal_run(empty, {}, 10)) == "output=[]");
  CHECK(to_string(universal_run(empty, L("1"), 10)) == "budget-exhausted");
}

TEST_CASE("smn currying") {
  auto id = encode_machine(corpus_program("identity"));
  CHECK(to_string(universal_run(smn_curry(id, L("3")), {}, 100)) == "output=[3]");
  CHECK(smn_curry(id, L("3")).size() == id.size());
  CHECK(smn_curry(id, L("T1")).size() == id.size() + 1);
  CHECK(describe(universal_run(smn_curry(id, {}), L("4"), 100)) == describe(universal_run(id, L("4"), 100)));
  Oracle iz = iz_oracle({});
  const std::vector<std::vector<FieldElem>> prefixes{{}, L("2"), L("T1"), L("1/3, T2"), L("T1, -1")};
  for (const auto& e : corpus()) {
    auto code = encode_machine(e.program);
    const Oracle* o = e.program.oracle ? &iz : nullptr;
    for (const auto& pre : prefixes)
      for (const auto& c : e.cases) {
        if (e.program.self_reference) continue;  // its own code changes under currying
        auto joined = pre;
        joined.insert(joined.end(), c.input.begin(), c.input.end());
        CHECK(describe(universal_run(smn_curry(code, pre), c.input, c.budget, SymbolicInfinite{}, o)) ==
              describe(universal_run(code, joined, c.budget, SymbolicInfinite{}, o)));
      }
  }
}

TEST_CASE("fixed points and quines") {
  auto target = encode_machine(corpus_program("square"));
  Program f = constant_transformer(target);
  auto x = fixed_point(f, 1000);
  auto fx = run(f, x.payload, 1000);
  REQUIRE(std::holds_alternative<Output>(fx));
  GodelCode image{std::get<Output>(fx).values};
  CHECK(image == target);
  for (const char* y : {"", "1", "1/2"})
    CHECK(to_string(universal_run(x, L(y), 10000)) == to_string(universal_run(image, L(y), 10000)));

  auto id = fixed_point(corpus_program("identity"), 1000);
  for (const char* y : {"", "1", "1/2"})
    CHECK(to_string(universal_run(id, L(y), 500)) == "budget-exhausted");
  CHECK_THROWS_AS(fixed_point(corpus_program("loop"), 100), Error);
  CHECK_THROWS_AS(fixed_point(decode_machine(x), 100), Error);

  auto q = make_quine();
  CHECK(q.size() == 1);
  auto out = universal_run(q, {}, 10);
  REQUIRE(std::holds_alternative<Output>(out));
  CHECK(to_string(std::get<Output>(out).values) == to_string(q.payload));
  CHECK(describe(universal_run(q, L("1, 2"), 10)) == describe(universal_run(q, L("1, 2"), 10)));
}
