#include "bsswb/codec.hpp"

#include "bsswb/error.hpp"
#include "bsswb/expr.hpp"

namespace bsswb {

Rat pair(const BigInt& n, const Rat& x) {
  if (n < 0) throw Error(Errc::InvalidArgument, "pair needs a nonnegative integer");
  Rat ax = abs(x);
  BigInt fl = floor_rat(ax);
  Rat frac = ax - Rat(fl);
  BigInt m = 2 * n + (x < 0 ? 1 : 0) + 1;
  // 2^m is materialized; cap the exponent at 2^32 bits
  if (m > BigInt(1UL << 32)) throw Error(Errc::OutOfRange, "pair index " + n.get_str() + " is too large");
  BigInt scale;
  mpz_mul_2exp(scale.get_mpz_t(), BigInt(1).get_mpz_t(), m.get_ui());
  return Rat(scale * (2 * fl + 1)) + frac;
}

std::pair<BigInt, Rat> unpair(const Rat& z) {
  if (z < 2) throw Error(Errc::NotACode, "code " + to_string(z) + " is below 2");
  BigInt w = floor_rat(z);
  Rat frac = z - Rat(w);
  if (mpz_odd_p(w.get_mpz_t())) throw Error(Errc::NotACode, "code " + to_string(z) + " has an odd integer part");
  unsigned long m = mpz_scan1(w.get_mpz_t(), 0);
  BigInt odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), w.get_mpz_t(), m);
  BigInt a = (odd - 1) / 2;
  unsigned long s = (m - 1) % 2;
  BigInt n = (m - 1 - s) / 2;
  Rat x = Rat(a) + frac;
  return {n, s ? Rat(-x) : x};
}

BigInt cantor_pair(const BigInt& a, const BigInt& b) {
  BigInt s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z) {
  BigInt r;
  BigInt d = 8 * z + 1;
  mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
  BigInt w = (r - 1) / 2;
  BigInt t = w * (w + 1) / 2;
  BigInt b = z - t;
  return {w - b, b};
}

BigInt text_to_number(std::string_view text) {
  BigInt v = 0;
  if (!text.empty())
    mpz_import(v.get_mpz_t(), text.size(), 1, 1, 1, 0, text.data());
  return v;
}

std::string number_to_text(const BigInt& v) {
  if (v < 0) throw Error(Errc::DeserializeError, "negative control number");
  if (v == 0) return {};
  std::string out(mpz_sizeinbase(v.get_mpz_t(), 256) + 1, '\0');
  std::size_t count = 0;
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

BigInt serialize_control(const Program& p) { return text_to_number(print_control(p, false)); }

ControlText deserialize_control(const BigInt& v) {
  std::string text = number_to_text(v);
  try {
    return parse_control(text);
  } catch (const Error& e) {
    throw Error(Errc::DeserializeError, std::string("control text does not parse: ") + e.what());
  }
}

namespace {

// Folds the control number into the integer part of c1: the result keeps
// c1's sign and fractional part, with integer part cantor(delta, floor|c1|).
Rat fold(const BigInt& delta, const Rat& c1) {
  Rat a = abs(c1);
  BigInt fl = floor_rat(a);
  Rat y = Rat(cantor_pair(delta, fl)) + (a - Rat(fl));
  return c1 < 0 ? Rat(-y) : y;
}

std::pair<BigInt, Rat> unfold(const Rat& y) {
  Rat a = abs(y);
  BigInt fl = floor_rat(a);
  auto [delta, k] = cantor_unpair(fl);
  Rat c1 = Rat(k) + (a - Rat(fl));
  return {delta, y < 0 ? Rat(-c1) : c1};
}

}  // namespace

GodelCode encode_machine(const Program& p, DummyPolicy policy) {
  bool dummy = !p.constants.empty() && !p.constants[0].is_rational();
  if (dummy && policy == DummyPolicy::Forbid)
    throw Error(Errc::NonRationalFirstConstant,
                "first constant " + to_string(p.constants[0]) + " is not rational");
  BigInt delta = text_to_number(print_control(p, dummy));
  Rat c1 = (p.constants.empty() || dummy) ? Rat(0) : p.constants[0].rational_value();
  GodelCode code;
  code.payload.push_back(RatFunc(pair(0, fold(delta, c1))));
  for (std::size_t i = dummy ? 0 : 1; i < p.constants.size(); ++i) code.payload.push_back(p.constants[i]);
  return code;
}

Program decode_machine(const GodelCode& code) {
  if (code.payload.empty()) throw Error(Errc::NotACode, "empty code");
  if (!code.payload[0].is_rational()) throw Error(Errc::NotACode, "first code entry is not rational");
  auto [n, y] = unpair(code.payload[0].rational_value());
  if (n != 0) throw Error(Errc::NotACode, "first code entry does not carry a control number");
  auto [delta, c1] = unfold(y);
  ControlText ct = deserialize_control(delta);
  Program p = std::move(ct.program);
  std::size_t j = ct.nconsts;
  std::size_t expected = j == 0 ? 1 : (ct.dummy ? j + 1 : j);
  if (code.payload.size() != expected)
    throw Error(Errc::DeserializeError, "code has " + std::to_string(code.payload.size()) +
                                            " entries, control expects " + std::to_string(expected));
  if (j > 0 && !ct.dummy) p.constants.push_back(RatFunc(c1));
  for (std::size_t i = 1; i < code.payload.size(); ++i) p.constants.push_back(code.payload[i]);
  for (const auto& c : p.constants)
    if (c.nvars() > p.symbols)
      throw Error(Errc::DeserializeError, "constant " + to_string(c) + " uses undeclared symbols");
  return p;
}

std::string to_string(const GodelCode& code) { return to_string(code.payload); }

GodelCode parse_godel_code(std::string_view text) {
  GodelCode code{parse_field_elem_list(text)};
  if (code.payload.empty()) throw Error(Errc::NotACode, "empty code");
  return code;
}

}  // namespace bsswb
