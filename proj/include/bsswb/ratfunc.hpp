#pragma once

#include <string>

#include "bsswb/mpoly.hpp"

namespace bsswb {

/// 1-based symbol index: Symbol{1} is T1.
struct Symbol {
  unsigned index;
};

/// Element of Q(T1..Tm) in canonical form: gcd(num, den) = 1 and den is a
/// primitive integer polynomial with positive leading coefficient. Equality
/// of values is equality of representations.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(implicit)
  RatFunc(long c) : RatFunc(Rat(c)) {}              // NOLINT(implicit)
  explicit RatFunc(MPoly num) : num_(std::move(num)), den_(Rat(1)) {}
  /// Throws Error(DivisionByZero) when den is zero.
  RatFunc(MPoly num, MPoly den);

  static RatFunc symbol(Symbol s);

  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant; throws std::logic_error otherwise.
  Rat constant_value() const;
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// One past the highest symbol (0-based variable) index in use.
  std::size_t nvars() const noexcept { return std::max(num_.nvars(), den_.nvars()); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rat& c) { return a *= RatFunc(c); }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(unsigned e) const;
  /// Partial derivative w.r.t. 0-based variable index.
  RatFunc derivative(std::size_t var) const;

 private:
  void canonicalize();
  // Scales an already coprime pair to the canonical denominator.
  void normalize_reduced();

  MPoly num_;
  MPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Throws Error(DivisionByZero) for Div by zero.
RatFunc arith(ArithOp op, const RatFunc& a, const RatFunc& b);

/// Partial derivative w.r.t. symbol s; `declared` is the number of symbols in
/// scope (T1..T_declared). Throws Error(UnknownSymbol).
RatFunc differentiate(const RatFunc& f, Symbol s, unsigned declared);

std::string to_string(const RatFunc& f);

}  // namespace bsswb
