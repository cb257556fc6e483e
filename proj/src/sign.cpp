#include "bsswb/sign.hpp"

#include <algorithm>

#include "bsswb/error.hpp"

namespace bsswb {

namespace {

Interval mul(const Interval& a, const Interval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval ipow(const Interval& a, std::uint32_t e) {
  if (e == 0) return {1, 1};
  Interval r = a;
  for (std::uint32_t i = 1; i < e; ++i) r = mul(r, a);
  if (e % 2 == 0 && a.lo < 0 && a.hi > 0) r.lo = 0;
  return r;
}

// Rounds outward onto the dyadic grid 2^-bits so endpoint sizes stay bounded.
Interval round_out(const Interval& x, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  BigInt lo, hi;
  Rat slo = x.lo * scale;
  Rat shi = x.hi * scale;
  mpz_fdiv_q(lo.get_mpz_t(), slo.get_num_mpz_t(), slo.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), shi.get_num_mpz_t(), shi.get_den_mpz_t());
  return {make_rat(lo, scale), make_rat(hi, scale)};
}

int strict_sign(const Interval& x) {
  if (x.lo > 0) return 1;
  if (x.hi < 0) return -1;
  return 0;
}

int numeric_sign(const RatFunc& x, const NumericBinding& nb) {
  std::size_t n = x.nvars();
  if (n > nb.oracles.size())
    throw Error(Errc::InvalidArgument, "no interval oracle bound to T" + std::to_string(n));
  for (unsigned k = 16; k <= (1u << 14); k *= 2) {
    std::vector<Interval> boxes;
    for (std::size_t i = 0; i < n; ++i) boxes.push_back(round_out(nb.oracles[i](k), k + 8));
    int sn = strict_sign(evaluate_interval(x.num(), boxes));
    int sd = strict_sign(evaluate_interval(x.den(), boxes));
    if (sn != 0 && sd != 0) return sn * sd;
  }
  throw Error(Errc::UnsupportedOrder, "interval refinement did not separate the value from 0");
}

}  // namespace

Interval evaluate_interval(const MPoly& p, const std::vector<Interval>& boxes) {
  Interval acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    Interval t{c, c};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = mul(t, ipow(boxes.at(i), m[i]));
    acc.lo += t.lo;
    acc.hi += t.hi;
  }
  return acc;
}

int sign(const RatFunc& x, const SignMode& mode) {
  if (x.is_zero()) return 0;
  if (x.is_constant()) return sgn(x.constant_value());
  if (std::holds_alternative<SymbolicInfinite>(mode)) {
    // den has a positive leading coefficient, so lc(num*den) has lc(num)'s sign.
    return sgn(x.num().leading_coeff());
  }
  return numeric_sign(x, std::get<NumericBinding>(mode));
}

int sign(const FieldElem& x, const SignMode& mode) {
  if (x.is_func()) return sign(x.func(), mode);
  return x.alg().sign();
}

std::pair<BigInt, RatFunc> floor_frac(const RatFunc& x, const SignMode&) {
  if (!x.is_constant())
    throw Error(Errc::UnsupportedOrder, "floor of a non-constant value leaves the carrier field");
  Rat v = x.constant_value();
  BigInt f = floor_rat(v);
  return {f, RatFunc(v - Rat(f))};
}

IntervalOracle oracle_e() {
  return [](unsigned k) {
    // e = sum 1/j!; tail after the n! term is below 2/(n+1)!.
    Rat sum = 0;
    BigInt fact = 1;
    BigInt target = BigInt(1) << (k + 1);
    for (unsigned j = 0;; ++j) {
      if (j > 0) fact *= j;
      sum += make_rat(1, fact);
      if (fact * (j + 1) > target) return Interval{sum, sum + make_rat(2, fact * (j + 1))};
    }
  };
}

IntervalOracle oracle_pi() {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239); alternating series bounds.
  auto atan_inv = [](unsigned x, unsigned k) {
    Rat sum = 0;
    Rat term = make_rat(1, x);
    Rat x2 = make_rat(1, BigInt(x) * x);
    Rat eps = make_rat(1, BigInt(1) << (k + 6));
    for (unsigned j = 0;; ++j) {
      Rat t = term / (2 * j + 1);
      if (t < eps) return Interval{j % 2 ? sum - t : sum, j % 2 ? sum : sum + t};
      sum += (j % 2 ? -t : t);
      term *= x2;
    }
  };
  return [atan_inv](unsigned k) {
    Interval a = atan_inv(5, k);
    Interval b = atan_inv(239, k);
    return Interval{16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
  };
}

IntervalOracle oracle_rational(const Rat& value) {
  return [value](unsigned) { return Interval{value, value}; };
}

}  // namespace bsswb
