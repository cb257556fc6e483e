#include "bsswb/field_elem.hpp"

#include <algorithm>

#include "bsswb/error.hpp"

namespace bsswb {


namespace {

std::size_t max_nvars(const std::vector<RatFunc>& fs) {
  std::size_t n = 0;
  for (const auto& f : fs) n = std::max(n, f.nvars());
  return n;
}

// minpoly with cleared denominators as a polynomial in T1..Tm and Z, where Z
// is the variable right after the last symbol in use.
MPoly as_polynomial_in_z(const std::vector<RatFunc>& minpoly, std::size_t zvar) {
  MPoly common(Rat(1));
  for (const auto& c : minpoly)
    common = common * c.den();
  MPoly out;
  for (std::size_t i = 0; i < minpoly.size(); ++i) {
    if (minpoly[i].is_zero()) continue;
    MPoly scaled = divide_exact(common * minpoly[i].num(), minpoly[i].den());
    out += scaled * MPoly::var(zvar, static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace

AlgElem AlgElem::make(std::vector<RatFunc> base, std::vector<RatFunc> minpoly,
                      std::optional<std::pair<Rat, Rat>> isolation, std::string witness) {
  while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
  if (minpoly.size() < 3)
    throw Error(Errc::InvalidArgument, "algebraic element needs a minimal polynomial of degree >= 2");
  std::size_t zvar = max_nvars(minpoly);
  MPoly p = as_polynomial_in_z(minpoly, zvar);
  MPoly g = gcd(p, p.derivative(zvar));
  if (g.degree(zvar) > 0)
    throw Error(Errc::InvalidArgument, "minimal polynomial is not squarefree");
  AlgElem a;
  if (base.empty()) {
    for (const auto& c : minpoly)
      if (!c.is_constant())
        throw Error(Errc::InvalidArgument, "algebraic element over Q needs rational coefficients");
    if (!isolation)
      throw Error(Errc::InvalidArgument, "algebraic element over Q needs an isolating interval");
    UPoly up;
    for (const auto& c : minpoly) up.push_back(c.constant_value());
    if (upoly::count_roots(up, isolation->first, isolation->second) != 1)
      throw Error(Errc::InvalidArgument, "interval does not isolate exactly one real root");
  } else {
    std::size_t bvars = max_nvars(base);
    for (const auto& c : minpoly)
      if (c.nvars() > bvars)
        throw Error(Errc::InvalidArgument, "minimal polynomial uses symbols outside its base");
    isolation.reset();
  }
  a.base_ = std::move(base);
  a.minpoly_ = std::move(minpoly);
  a.isolation_ = std::move(isolation);
  a.witness_ = std::move(witness);
  return a;
}

UPoly AlgElem::rational_minpoly() const {
  if (!base_.empty()) throw Error(Errc::UnsupportedOrder, "algebraic element has a non-empty base");
  UPoly up;
  for (const auto& c : minpoly_) up.push_back(c.constant_value());
  return up;
}

int AlgElem::sign() const {
  UPoly p = rational_minpoly();
  Rat a = isolation_->first;
  Rat b = isolation_->second;
  if (upoly::eval(p, 0) == 0 && a < 0 && 0 < b) return 0;
  while (true) {
    if (a >= 0) return 1;
    if (b <= 0) return -1;
    Rat mid = (a + b) / 2;
    Rat v = upoly::eval(p, mid);
    if (v == 0) return sgn(mid);
    if (upoly::count_roots(p, a, mid) == 1)
      b = mid;
    else
      a = mid;
  }
}

std::size_t FieldElem::nvars() const noexcept {
  if (is_func()) return func().nvars();
  std::size_t n = max_nvars(alg().base());
  return std::max(n, max_nvars(alg().minpoly()));
}

std::string to_string(const AlgElem& a) {
  std::size_t zvar = max_nvars(a.minpoly());
  bool polynomial = std::all_of(a.minpoly().begin(), a.minpoly().end(),
                                [](const RatFunc& c) { return c.is_polynomial(); });
  std::string poly;
  if (polynomial) {
    MPoly p;
    for (std::size_t i = 0; i < a.minpoly().size(); ++i)
      p += a.minpoly()[i].num() * MPoly::var(zvar, static_cast<std::uint32_t>(i));
    poly = to_string(p, [zvar](std::size_t v) { return v == zvar ? std::string("Z") : default_var_name(v); });
  } else {
    for (std::size_t i = a.minpoly().size(); i-- > 0;) {
      if (a.minpoly()[i].is_zero()) continue;
      if (!poly.empty()) poly += " + ";
      poly += "(" + to_string(a.minpoly()[i]) + ")";
      if (i > 0) poly += "*Z" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
  }
  std::string out = "alg(" + poly;
  if (a.base().empty()) {
    out += ", " + a.isolation()->first.get_str() + ", " + a.isolation()->second.get_str();
  } else {
    out += " |";
    for (std::size_t i = 0; i < a.base().size(); ++i)
      out += (i ? ", " : " ") + to_string(a.base()[i]);
  }
  return out + ")";
}

std::string to_string(const FieldElem& x) {
  return x.is_func() ? to_string(x.func()) : to_string(x.alg());
}

std::string to_string(const std::vector<FieldElem>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
  return out + "]";
}

std::optional<RatFunc> has_rational_function_root(const std::vector<RatFunc>& minpoly) {
  std::vector<RatFunc> p = minpoly;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (p.size() < 2) throw Error(Errc::InvalidArgument, "polynomial must have degree 1 or 2");
  if (p.size() > 3) throw Error(Errc::DegreeUnsupported, "degree " + std::to_string(p.size() - 1));
  if (p.size() == 2) return -p[0] / p[1];
  const RatFunc& a = p[2];
  const RatFunc& b = p[1];
  const RatFunc& c = p[0];
  RatFunc disc = b * b - RatFunc(4) * a * c;
  RatFunc two_a = RatFunc(2) * a;
  if (disc.is_zero()) return -b / two_a;
  // disc = N/D is a square in Q(T) iff N*D is a square in Q[T].
  auto s = poly_sqrt(disc.num() * disc.den());
  if (!s) return std::nullopt;
  RatFunc root_disc(*s, disc.den());
  return (root_disc - b) / two_a;
}

}  // namespace bsswb
