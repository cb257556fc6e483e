#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsswb/rat.hpp"

namespace bsswb {

/// Exponent vector; index i is the exponent of variable i. Trailing zeros are
/// always trimmed, so the arity is implicit and the constant monomial is empty.
using Monomial = std::vector<std::uint32_t>;

/// Lex order with the highest-index variable most significant.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_div(const Monomial& m, const Monomial& d);
std::uint32_t monomial_degree(const Monomial& m);
void trim(Monomial& m);

/// Sparse multivariate polynomial over Q. No zero coefficients are stored; the
/// zero polynomial has no terms. The last term in iteration order is the
/// leading term.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rat, MonomialLess>;

  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(long c) : MPoly(Rat(c)) {}

  static MPoly var(std::size_t index, std::uint32_t exponent = 1);
  static MPoly term(Monomial m, const Rat& c);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value (0 for the zero polynomial).
  Rat constant_term() const;

  const Monomial& leading_monomial() const;
  const Rat& leading_coeff() const;

  /// One past the highest variable index that occurs.
  std::size_t nvars() const noexcept;
  std::uint32_t degree(std::size_t var) const noexcept;
  std::uint32_t total_degree() const noexcept;
  /// Highest variable index occurring, or nullopt for constants.
  std::optional<std::size_t> main_var() const noexcept;

  void add_term(const Monomial& m, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator-(MPoly a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t var) const;
  MPoly multiply_monomial(const Monomial& m, const Rat& c) const;

  /// Substitutes values[i] for variable i; variables beyond values.size()
  /// are an error.
  template <class T>
  T evaluate(const std::vector<T>& values, const T& one) const;

  /// Denominator lcm of all coefficients and gcd of numerators.
  BigInt denominator_lcm() const;
  BigInt numerator_gcd() const;
  bool has_integer_coeffs() const;

 private:
  Terms terms_;
};

/// Coefficients of p viewed as a univariate polynomial in `var`.
std::map<std::uint32_t, MPoly> coefficients_in(const MPoly& p, std::size_t var);
MPoly from_coefficients(const std::map<std::uint32_t, MPoly>& coeffs, std::size_t var);

/// Exact quotient a/b if b divides a in Q[vars], else nullopt.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);
/// a/b where b is known to divide a; throws std::logic_error otherwise.
MPoly divide_exact(const MPoly& a, const MPoly& b);

/// Integer-coefficient primitive associate with positive leading coefficient.
/// Returns the zero polynomial unchanged.
MPoly primitive_normalize(const MPoly& p);
/// Factor c with c * p == primitive_normalize(p).
Rat normalizing_factor(const MPoly& p);

/// gcd in Q[vars], normalized with primitive_normalize.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Exact square root in Q[vars] if p is a perfect square.
std::optional<MPoly> poly_sqrt(const MPoly& p);

using VarNamer = std::function<std::string(std::size_t)>;
std::string default_var_name(std::size_t index);  // T1, T2, ...
/// Deterministic rendering; terms in descending order. When `low_major` is
/// set, the order is lex with variable 0 most significant instead.
std::string to_string(const MPoly& p, const VarNamer& namer = default_var_name,
                      bool low_major = false);
std::string rat_factor_string(const Rat& c);

template <class T>
T MPoly::evaluate(const std::vector<T>& values, const T& one) const {
  T acc = one - one;
  for (const auto& [m, c] : terms_) {
    T t = one;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t = t * values.at(i);
    acc = acc + t * c;
  }
  return acc;
}

}  // namespace bsswb
