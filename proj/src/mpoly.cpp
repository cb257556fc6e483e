#include "bsswb/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsswb/error.hpp"
#include "bsswb/upoly.hpp"

namespace bsswb {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
  Monomial r = m;
  for (std::size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  trim(r);
  return r;
}

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t s = 0;
  for (auto e : m) s += e;
  return s;
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(std::size_t index, std::uint32_t exponent) {
  Monomial m(index + 1, 0);
  m[index] = exponent;
  trim(m);
  return term(std::move(m), Rat(1));
}

MPoly MPoly::term(Monomial m, const Rat& c) {
  trim(m);
  MPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

std::size_t MPoly::nvars() const noexcept {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

std::uint32_t MPoly::degree(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_)
    if (var < m.size()) d = std::max(d, m[var]);
  return d;
}

std::uint32_t MPoly::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

std::optional<std::size_t> MPoly::main_var() const noexcept {
  // Monomials are ordered by length first, so the leading one has the
  // largest arity.
  if (terms_.empty() || terms_.rbegin()->first.empty()) return std::nullopt;
  return terms_.rbegin()->first.size() - 1;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [m, v] : a.terms_) v = -v;
  return a;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(Rat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (var >= m.size() || m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    trim(d);
    r.add_term(d, c * m[var]);
  }
  return r;
}

MPoly MPoly::multiply_monomial(const Monomial& m, const Rat& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), monomial_mul(mm, m), cc * c);
  return r;
}

BigInt MPoly::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

BigInt MPoly::numerator_gcd() const {
  BigInt g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

bool MPoly::has_integer_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

std::map<std::uint32_t, MPoly> coefficients_in(const MPoly& p, std::size_t var) {
  std::map<std::uint32_t, MPoly> out;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = var < m.size() ? m[var] : 0;
    Monomial rest = m;
    if (var < rest.size()) rest[var] = 0;
    trim(rest);
    out[e].add_term(rest, c);
  }
  return out;
}

MPoly from_coefficients(const std::map<std::uint32_t, MPoly>& coeffs, std::size_t var) {
  MPoly r;
  for (const auto& [e, c] : coeffs) {
    Monomial m(var + 1, 0);
    m[var] = e;
    trim(m);
    r += c.multiply_monomial(m, Rat(1));
  }
  return r;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MPoly{};
  const Monomial& lb = b.leading_monomial();
  const Rat& cb = b.leading_coeff();
  if (b.size() == 1) {
    MPoly q;
    Rat inv = 1 / cb;
    for (const auto& [m, c] : a.terms()) {
      if (!monomial_divides(lb, m)) return std::nullopt;
      q.add_term(monomial_div(m, lb), c * inv);
    }
    return q;
  }
  MPoly q;
  MPoly r = a;
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!monomial_divides(lb, lr)) return std::nullopt;
    Monomial qm = monomial_div(lr, lb);
    Rat qc = r.leading_coeff() / cb;
    q.add_term(qm, qc);
    r -= b.multiply_monomial(qm, qc);
  }
  return q;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("divide_exact: divisor does not divide");
  return std::move(*q);
}

Rat normalizing_factor(const MPoly& p) {
  if (p.is_zero()) return Rat(1);
  Rat f = make_rat(p.denominator_lcm(), 1);
  BigInt g = (p * f).numerator_gcd();
  f /= g;
  if (p.leading_coeff() < 0) f = -f;
  return f;
}

MPoly primitive_normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * normalizing_factor(p);
}

namespace {

MPoly content_in(const MPoly& p, std::size_t var) {
  MPoly g;
  for (const auto& [e, c] : coefficients_in(p, var)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return MPoly(Rat(1));
  }
  return g;
}

// Pseudo-remainder of a by b w.r.t. `var`; deg_var(b) >= 1.
MPoly prem(MPoly a, const MPoly& b, std::size_t var) {
  auto cb = coefficients_in(b, var);
  std::uint32_t db = cb.rbegin()->first;
  const MPoly& lb = cb.rbegin()->second;
  while (!a.is_zero()) {
    auto ca = coefficients_in(a, var);
    std::uint32_t da = ca.rbegin()->first;
    if (da < db) break;
    Monomial shift(var + 1, 0);
    shift[var] = da - db;
    trim(shift);
    MPoly t = ca.rbegin()->second * b;
    a = lb * a - t.multiply_monomial(shift, Rat(1));
  }
  return a;
}

UPoly specialize(const MPoly& p, std::size_t var, const std::vector<Rat>& at) {
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var)
        for (std::uint32_t k = 0; k < m[i]; ++k) v *= at[i];
    std::uint32_t e = var < m.size() ? m[var] : 0;
    if (out.size() <= e) out.resize(e + 1);
    out[e] += v;
  }
  return out;
}

// True when a and b provably share no factor involving `var`: at some point
// keeping both leading coefficients nonzero, the univariate images are
// coprime. (Specialization can only raise the gcd's degree.)
bool coprime_in(const MPoly& a, const MPoly& b, std::size_t var) {
  std::size_t n = std::max(a.nvars(), b.nvars());
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Rat> at(n);
    for (std::size_t i = 0; i < n; ++i) at[i] = Rat(static_cast<long>(3 + 2 * i + 7 * attempt + (i * i) % 5));
    UPoly ua = specialize(a, var, at), ub = specialize(b, var, at);
    if (ua.size() != a.degree(var) + 1u || ua.back() == 0) continue;
    if (ub.size() != b.degree(var) + 1u || ub.back() == 0) continue;
    while (!ub.empty()) {
      UPoly r = upoly::rem(ua, ub);
      ua = std::move(ub);
      ub = std::move(r);
    }
    return ua.size() == 1;
  }
  return false;
}

MPoly monomial_gcd(const Monomial& mono, const MPoly& b) {
  Monomial g = mono;
  for (const auto& [m, c] : b.terms()) {
    if (g.size() > m.size()) g.resize(m.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
  }
  trim(g);
  return MPoly::term(g, Rat(1));
}

BigInt max_norm(const MPoly& p) {
  BigInt m = 0;
  for (const auto& [mono, c] : p.terms())
    if (abs(c.get_num()) > m) m = abs(c.get_num());
  return m;
}

MPoly substitute_integer(const MPoly& p, std::size_t var, const BigInt& xi) {
  std::vector<BigInt> powers{1};
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = var < m.size() ? m[var] : 0;
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    Monomial rest = m;
    if (var < rest.size()) rest[var] = 0;
    trim(rest);
    out.add_term(rest, c * Rat(powers[e]));
  }
  return out;
}

// Symmetric xi-adic expansion of every coefficient, digits become the
// coefficients of var^i.
MPoly xi_adic_lift(const MPoly& gamma, std::size_t var, const BigInt& xi) {
  MPoly out;
  BigInt half = xi / 2;
  for (const auto& [m, c] : gamma.terms()) {
    BigInt v = c.get_num();
    for (std::uint32_t i = 0; v != 0; ++i) {
      BigInt d;
      mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      if (d != 0) {
        Monomial mm = m;
        if (mm.size() <= var) mm.resize(var + 1, 0);
        mm[var] = i;
        trim(mm);
        out.add_term(mm, Rat(d));
      }
      v = (v - d) / xi;
    }
  }
  return out;
}

// Heuristic gcd of integer polynomials (Char, Geddes, Gonnet). Returns the
// gcd in Z[vars] including integer content, or nullopt on failure.
std::optional<MPoly> gcd_heuristic(const MPoly& a, const MPoly& b) {
  BigInt ca = a.numerator_gcd(), cb = b.numerator_gcd(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MPoly(Rat(cg));
  MPoly pa = a * make_rat(1, ca), pb = b * make_rat(1, cb);
  std::size_t var = std::max(*pa.main_var(), *pb.main_var());
  BigInt xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  std::size_t deg = std::max(pa.degree(var), pb.degree(var));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max<std::size_t>(deg, 1) > 6000) return std::nullopt;
    auto gamma = gcd_heuristic(substitute_integer(pa, var, xi), substitute_integer(pb, var, xi));
    if (gamma) {
      MPoly g = xi_adic_lift(*gamma, var, xi);
      if (!g.is_zero()) {
        g = primitive_normalize(g);
        if (exact_divide(pa, g) && exact_divide(pb, g)) return g * Rat(cg);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return primitive_normalize(b);
  if (b.is_zero()) return primitive_normalize(a);
  if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
  if (a.size() == 1 && b.size() == 1) {
    const Monomial& ma = a.leading_monomial();
    const Monomial& mb = b.leading_monomial();
    Monomial g(std::min(ma.size(), mb.size()));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(ma[i], mb[i]);
    return MPoly::term(g, Rat(1));
  }
  if (a.size() == 1) return monomial_gcd(a.leading_monomial(), b);
  if (b.size() == 1) return monomial_gcd(b.leading_monomial(), a);
  std::size_t var = std::max(*a.main_var(), *b.main_var());
  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly g_content = gcd(ca, cb);
  if (a.degree(var) == 0 || b.degree(var) == 0 || coprime_in(a, b, var)) return g_content;
  if (auto h = gcd_heuristic(primitive_normalize(a), primitive_normalize(b)))
    return primitive_normalize(*h);
  MPoly pa = divide_exact(a, ca);
  MPoly pb = divide_exact(b, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  MPoly g;
  if (pb.degree(var) == 0) {
    g = MPoly(Rat(1));
  } else {
    while (true) {
      MPoly r = prem(pa, pb, var);
      if (r.is_zero()) {
        g = pb;
        break;
      }
      if (r.degree(var) == 0) {
        g = MPoly(Rat(1));
        break;
      }
      pa = std::move(pb);
      pb = divide_exact(r, content_in(r, var));
      pb = primitive_normalize(pb);
    }
    g = divide_exact(g, content_in(g, var));
  }
  return primitive_normalize(g_content * g);
}

std::optional<MPoly> poly_sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly{};
  // Every monomial of the root is bounded by half of p's per-variable degree.
  std::size_t n = p.nvars();
  std::vector<std::uint32_t> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = p.degree(i) / 2;
  auto sqrt_rat = [](const Rat& c) -> std::optional<Rat> {
    if (c < 0) return std::nullopt;
    if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
      return std::nullopt;
    BigInt nn, dd;
    mpz_sqrt(nn.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(dd.get_mpz_t(), c.get_den_mpz_t());
    return make_rat(nn, dd);
  };
  const Monomial& lm = p.leading_monomial();
  Monomial half(lm.size());
  for (std::size_t i = 0; i < lm.size(); ++i) {
    if (lm[i] % 2) return std::nullopt;
    half[i] = lm[i] / 2;
  }
  auto lc = sqrt_rat(p.leading_coeff());
  if (!lc) return std::nullopt;
  MPoly root = MPoly::term(half, *lc);
  MPoly two_lead = MPoly::term(half, *lc * 2);
  Monomial last = half;
  MonomialLess less;
  while (true) {
    MPoly rem = p - root * root;
    if (rem.is_zero()) return root;
    const Monomial& rm = rem.leading_monomial();
    if (!monomial_divides(half, rm)) return std::nullopt;
    Monomial next = monomial_div(rm, half);
    if (!less(next, last)) return std::nullopt;
    for (std::size_t i = 0; i < next.size(); ++i)
      if (i >= n || next[i] > bound[i]) return std::nullopt;
    Rat c = rem.leading_coeff() / (*lc * 2);
    root.add_term(next, c);
    last = next;
  }
}

std::string default_var_name(std::size_t index) { return "T" + std::to_string(index + 1); }

std::string rat_factor_string(const Rat& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "(" + c.get_str() + ")";
}

std::string to_string(const MPoly& p, const VarNamer& namer, bool low_major) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().rbegin(), p.terms().rend());
  if (low_major) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      std::size_t n = std::max(a.first.size(), b.first.size());
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t x = i < a.first.size() ? a.first[i] : 0;
        std::uint32_t y = i < b.first.size() ? b.first[i] : 0;
        if (x != y) return x > y;
      }
      return false;
    });
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += namer(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_factor_string(a) + "*" + mono;
    }
  }
  return out;
}

}  // namespace bsswb
