#pragma once

#include <gmpxx.h>

#include <string>

namespace bsswb {

using BigInt = mpz_class;
/// Exact rational; mpq_class keeps numerator/denominator reduced with a
/// positive denominator once canonicalize() has run, which every helper here
/// guarantees.
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q" in decimal.
Rat parse_rat(const std::string& text);

}  // namespace bsswb
