#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bsswb/ratfunc.hpp"
#include "bsswb/upoly.hpp"

namespace bsswb {


/// A real algebraic over the field generated by `base`: a root of `minpoly`
/// (coefficient of Z^i at index i). With an empty base the coefficients are
/// rational and `isolation` pins down a single real root in the open interval.
class AlgElem {
 public:
  /// Validates: degree >= 2, nonzero leading coefficient, squarefree; empty
  /// base needs rational coefficients and an interval with exactly one root.
  /// Throws Error(InvalidArgument).
  static AlgElem make(std::vector<RatFunc> base, std::vector<RatFunc> minpoly,
                      std::optional<std::pair<Rat, Rat>> isolation, std::string witness = {});

  const std::vector<RatFunc>& base() const noexcept { return base_; }
  const std::vector<RatFunc>& minpoly() const noexcept { return minpoly_; }
  const std::optional<std::pair<Rat, Rat>>& isolation() const noexcept { return isolation_; }
  const std::string& witness() const noexcept { return witness_; }
  std::size_t degree() const noexcept { return minpoly_.size() - 1; }

  /// Exact sign of the isolated real root (empty base only); throws
  /// Error(UnsupportedOrder) when the base is not empty.
  int sign() const;

  /// Rational-coefficient minimal polynomial (empty base only).
  UPoly rational_minpoly() const;

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.base_ == b.base_ && a.minpoly_ == b.minpoly_ && a.isolation_ == b.isolation_;
  }

 private:
  AlgElem() = default;
  std::vector<RatFunc> base_;
  std::vector<RatFunc> minpoly_;
  std::optional<std::pair<Rat, Rat>> isolation_;
  std::string witness_;
};

/// A tape value: a rational function or a declared-algebraic element.
class FieldElem {
 public:
  FieldElem() : v_(RatFunc()) {}
  FieldElem(RatFunc f) : v_(std::move(f)) {}  // NOLINT(implicit)
  FieldElem(AlgElem a) : v_(std::move(a)) {}  // NOLINT(implicit)
  FieldElem(const Rat& r) : v_(RatFunc(r)) {}  // NOLINT(implicit)
  FieldElem(long r) : v_(RatFunc(r)) {}  // NOLINT(implicit)

  bool is_func() const noexcept { return std::holds_alternative<RatFunc>(v_); }
  bool is_alg() const noexcept { return !is_func(); }
  const RatFunc& func() const { return std::get<RatFunc>(v_); }
  const AlgElem& alg() const { return std::get<AlgElem>(v_); }
  bool is_rational() const noexcept { return is_func() && func().is_constant(); }
  Rat rational_value() const { return func().constant_value(); }
  bool is_zero() const noexcept { return is_func() && func().is_zero(); }
  std::size_t nvars() const noexcept;

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  std::variant<RatFunc, AlgElem> v_;
};

std::string to_string(const FieldElem& x);
std::string to_string(const AlgElem& a);
std::string to_string(const std::vector<FieldElem>& xs);  // "[a, b]"

/// Root in Q(T1..Tm) of a degree-1 or degree-2 polynomial with rational
/// function coefficients (Z^i at index i), if one exists.
/// Throws Error(DegreeUnsupported) for degree >= 3 and Error(InvalidArgument)
/// for constant input.
std::optional<RatFunc> has_rational_function_root(const std::vector<RatFunc>& minpoly);


}  // namespace bsswb
