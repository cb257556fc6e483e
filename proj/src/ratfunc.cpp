#include "bsswb/ratfunc.hpp"

#include <stdexcept>

#include "bsswb/error.hpp"

namespace bsswb {

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::symbol(Symbol s) {
  if (s.index == 0) throw Error(Errc::UnknownSymbol, "symbols are numbered from T1");
  return RatFunc(MPoly::var(s.index - 1));
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant rational function");
  return num_.constant_term() / den_.constant_term();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_term();
    den_ = MPoly(Rat(1));
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  Rat f = normalizing_factor(den_);
  den_ *= f;
  num_ *= f;
  if (den_.is_constant()) {  // gcd removed every non-constant factor
    num_ *= 1 / den_.constant_term();
    den_ = MPoly(Rat(1));
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

namespace {

// (n1/d1)*(n2/d2) for reduced inputs: cancelling gcd(n1,d2) and gcd(n2,d1)
// leaves a reduced product.
std::pair<MPoly, MPoly> reduced_product(const MPoly& n1, const MPoly& d1, const MPoly& n2,
                                        const MPoly& d2) {
  MPoly g1 = gcd(n1, d2), g2 = gcd(n2, d1);
  MPoly a = g1.is_constant() ? n1 : divide_exact(n1, g1);
  MPoly b = g2.is_constant() ? n2 : divide_exact(n2, g2);
  MPoly c = g2.is_constant() ? d1 : divide_exact(d1, g2);
  MPoly d = g1.is_constant() ? d2 : divide_exact(d2, g1);
  return {a * b, c * d};
}

}  // namespace

void RatFunc::normalize_reduced() {
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  Rat f = normalizing_factor(den_);
  den_ *= f;
  num_ *= f;
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_term();
    den_ = MPoly(Rat(1));
  }
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  auto [n, d] = reduced_product(num_, den_, o.num_, o.den_);
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_reduced();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero function");
  auto [n, d] = reduced_product(num_, den_, o.den_, o.num_);
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_reduced();
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  // Powers of coprime polynomials stay coprime; only the scale may drift.
  r.canonicalize();
  return r;
}

RatFunc RatFunc::derivative(std::size_t var) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc arith(ArithOp op, const RatFunc& a, const RatFunc& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("arith: bad op");
}

RatFunc differentiate(const RatFunc& f, Symbol s, unsigned declared) {
  if (s.index == 0 || s.index > declared)
    throw Error(Errc::UnknownSymbol, "T" + std::to_string(s.index) + " is not declared");
  return f.derivative(s.index - 1);
}

namespace {

bool needs_parens_as_divisor(const MPoly& p) {
  if (p.size() != 1) return true;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1) return true;
  std::size_t factors = 0;
  for (auto e : m)
    if (e) ++factors;
  return factors > 1;
}

}  // namespace

std::string to_string(const RatFunc& f) {
  std::string n = to_string(f.num());
  if (f.is_polynomial()) return n;
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = to_string(f.den());
  if (needs_parens_as_divisor(f.den())) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace bsswb
