#include "bsswb/irreducible.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "bsswb/error.hpp"

namespace bsswb {

namespace {

constexpr int kI[10] = {0, 1, 0, 2, 1, 0, 3, 2, 1, 0};
constexpr int kJ[10] = {0, 0, 1, 0, 1, 2, 0, 1, 2, 3};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> positive_divisors(std::int64_t v) {
  std::uint64_t n = std::llabs(v);
  std::vector<std::int64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Divisors of |v| <= 2^20 (at most 240) into a caller buffer.
int small_divisors(std::int64_t v, std::int64_t* out) {
  std::uint64_t n = std::llabs(v);
  int k = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out[k++] = d;
      if (d * d != n) out[k++] = n / d;
    }
  return k;
}

// b^3 f(-a/b) for a cubic f; zero iff -a/b is a root (b != 0).
bool cubic_root(const std::int64_t (&f)[4], __int128 a, __int128 b) {
  __int128 s = 0, pa = 1;
  for (int i = 0; i < 4; ++i) {
    __int128 pb = 1;
    for (int j = i; j < 3; ++j) pb *= b;
    s += f[i] * pa * pb;
    pa *= -a;
  }
  return s == 0;
}

// Lowest and highest nonzero coefficient of a univariate cubic.
std::pair<std::int64_t, std::int64_t> low_high(const std::int64_t (&f)[4]) {
  std::int64_t lo = 0, hi = 0;
  for (int i = 0; i < 4; ++i)
    if (f[i]) {
      if (!lo) lo = f[i];
      hi = f[i];
    }
  return {lo, hi};
}

// Does a + bX + cY divide p over Q? p vanishes on the line; degree <= 3 so
// four sample points along it decide.
bool line_divides(const SmallBivariate& p, __int128 a, __int128 b, __int128 c) {
  if (c != 0) {
    for (__int128 x = 0; x < 4; ++x) {
      __int128 t = -(a + b * x);  // y = t / c
      __int128 s = 0;
      for (int k = 0; k < 10; ++k) {
        if (!p.c[k]) continue;
        __int128 v = p.c[k];
        for (int i = 0; i < kI[k]; ++i) v *= x;
        for (int j = 0; j < kJ[k]; ++j) v *= t;
        for (int j = kJ[k]; j < 3; ++j) v *= c;
        s += v;
      }
      if (s != 0) return false;
    }
    return true;
  }
  // X = -a/b: every Y^j coefficient polynomial must vanish there.
  for (int j = 0; j < 4; ++j) {
    __int128 s = 0;
    for (int k = 0; k < 10; ++k) {
      if (kJ[k] != j || !p.c[k]) continue;
      __int128 v = p.c[k];
      for (int i = 0; i < kI[k]; ++i) v *= -a;
      for (int i = kI[k]; i < 3; ++i) v *= b;
      s += v;
    }
    if (s != 0) return false;
  }
  return true;
}

BigInt content_of(const MPoly& p) { return p.numerator_gcd(); }

// ---- general path: Kronecker search on a translated simplex grid ----

using Point = std::vector<long>;

void simplex_points(std::size_t n, unsigned k, Point& cur, std::vector<Point>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  long used = std::accumulate(cur.begin(), cur.end(), 0L);
  for (long e = 0; e + used <= static_cast<long>(k); ++e) {
    cur.push_back(e);
    simplex_points(n, k, cur, out);
    cur.pop_back();
  }
}

BigInt binom(long n, long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// binom(X_var - shift, m) as a polynomial.
MPoly binom_poly(std::size_t var, long shift, long m) {
  MPoly r(1L);
  BigInt fact = 1;
  for (long i = 0; i < m; ++i) {
    r *= MPoly::var(var) - MPoly(Rat(shift + i));
    fact *= i + 1;
  }
  return r * make_rat(1, fact);
}

Rat eval_at(const MPoly& p, const Point& v) {
  std::vector<Rat> vals(v.begin(), v.end());
  return p.evaluate(vals, Rat(1));
}

struct Grid {
  Point origin;
  std::vector<Point> offsets;
  std::vector<BigInt> values;
  std::vector<std::vector<std::int64_t>> divisors;
  long double combos = 0;
};

std::optional<Grid> make_grid(const MPoly& p, std::size_t n, const Point& origin,
                              const std::vector<Point>& offsets) {
  Grid g{origin, offsets, {}, {}, 1};
  for (std::size_t idx = 0; idx < offsets.size(); ++idx) {
    Point v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = origin[i] + offsets[idx][i];
    Rat val = eval_at(p, v);
    if (val == 0 || !mpz_fits_slong_p(val.get_num_mpz_t()) ||
        abs(val.get_num()) > BigInt("1000000000000"))
      return std::nullopt;
    std::int64_t iv = val.get_num().get_si();
    auto ds = positive_divisors(iv);
    g.values.push_back(val.get_num());
    g.combos *= static_cast<long double>(ds.size()) * (idx == 0 ? 1 : 2);
    g.divisors.push_back(std::move(ds));
  }
  return g;
}

Point next_origin(std::size_t n, std::size_t ordinal) {
  // Enumerates Z^n in rings of increasing max-norm, deterministic order.
  static const long walk[] = {0, 1, -1, 2, -2, 3, -3};
  Point v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = walk[ordinal % 7];
    ordinal /= 7;
  }
  return v;
}

bool has_factor_of_degree(const MPoly& p, std::size_t n, unsigned k, std::uint64_t& budget) {
  std::vector<Point> offsets;
  Point cur;
  simplex_points(n, k, cur, offsets);

  std::optional<Grid> best;
  std::size_t limit = 1;
  for (std::size_t i = 0; i < n && limit < 2401; ++i) limit *= 7;
  for (std::size_t ord = 0; ord < limit; ++ord) {
    auto g = make_grid(p, n, next_origin(n, ord), offsets);
    if (g && (!best || g->combos < best->combos)) best = std::move(g);
  }
  if (!best) throw Error(Errc::SearchSpaceTooLarge, "no usable evaluation grid");
  if (best->combos > static_cast<long double>(budget))
    throw Error(Errc::SearchSpaceTooLarge, "candidate divisor count exceeds the cap");

  // Newton basis on the simplex: q = sum_e D_e * prod_i binom(X_i - o_i, e_i),
  // D_e = sum_{f<=e} (-1)^{|e-f|} prod_i binom(e_i, f_i) q(o+f).
  std::size_t npts = offsets.size();
  std::vector<MPoly> basis(npts);
  std::vector<std::vector<BigInt>> weight(npts, std::vector<BigInt>(npts));
  for (std::size_t e = 0; e < npts; ++e) {
    MPoly b(1L);
    for (std::size_t i = 0; i < n; ++i) b *= binom_poly(i, best->origin[i], offsets[e][i]);
    basis[e] = b;
    for (std::size_t f = 0; f < npts; ++f) {
      bool below = true;
      long dist = 0;
      BigInt w = 1;
      for (std::size_t i = 0; i < n && below; ++i) {
        if (offsets[f][i] > offsets[e][i]) below = false;
        dist += offsets[e][i] - offsets[f][i];
        if (below) w *= binom(offsets[e][i], offsets[f][i]);
      }
      if (below) weight[e][f] = dist % 2 ? BigInt(-w) : w;
    }
  }

  std::vector<std::size_t> choice(npts, 0);
  std::vector<BigInt> vals(npts);
  std::vector<std::uint32_t> var_deg(n);
  for (std::size_t i = 0; i < n; ++i) var_deg[i] = p.degree(i);
  while (true) {
    if (budget == 0) throw Error(Errc::SearchSpaceTooLarge, "candidate divisor count exceeds the cap");
    --budget;
    for (std::size_t j = 0; j < npts; ++j) {
      std::size_t c = choice[j];
      std::size_t nd = best->divisors[j].size();
      BigInt d = best->divisors[j][c % nd];
      vals[j] = c >= nd ? BigInt(-d) : d;
    }
    MPoly q;
    bool integral = true;
    for (std::size_t e = 0; e < npts && integral; ++e) {
      BigInt de = 0;
      for (std::size_t f = 0; f < npts; ++f)
        if (weight[e][f] != 0) de += weight[e][f] * vals[f];
      if (de != 0) q += basis[e] * Rat(de);
    }
    if (!q.has_integer_coeffs()) integral = false;
    if (integral && q.total_degree() >= 1) {
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i)
        if (q.degree(i) > var_deg[i]) fits = false;
      if (fits && exact_divide(p, q)) return true;
    }
    // Odometer; the first point only takes positive values (q and -q alike).
    std::size_t j = 0;
    for (; j < npts; ++j) {
      std::size_t span = best->divisors[j].size() * (j == 0 ? 1 : 2);
      if (++choice[j] < span) break;
      choice[j] = 0;
    }
    if (j == npts) return false;
  }
}

}  // namespace

MPoly to_mpoly(const SmallBivariate& p) {
  MPoly r;
  for (int k = 0; k < 10; ++k) {
    if (!p.c[k]) continue;
    Monomial m{static_cast<std::uint32_t>(kI[k]), static_cast<std::uint32_t>(kJ[k])};
    trim(m);
    r.add_term(m, Rat(static_cast<long>(p.c[k])));
  }
  return r;
}

bool poly_irreducible_small(const SmallBivariate& p) {
  std::int64_t g = 0;
  int deg = -1;
  for (int k = 0; k < 10; ++k) {
    if (std::llabs(p.c[k]) > (1 << 20))
      throw Error(Errc::InvalidArgument, "coefficient too large for the dense bivariate path");
    g = std::gcd(g, p.c[k]);
    if (p.c[k]) deg = std::max(deg, kI[k] + kJ[k]);
  }
  if (deg < 0) throw Error(Errc::InvalidArgument, "zero polynomial");
  if (deg == 0) return g == 1 || is_prime(g);
  if (g > 1) return false;
  if (deg == 1) return true;
  const std::int64_t fx[4] = {p.c[0], p.c[1], p.c[3], p.c[6]};
  const std::int64_t fy[4] = {p.c[0], p.c[2], p.c[5], p.c[9]};
  auto [fx_lo, fx_hi] = low_high(fx);
  auto [fy_lo, fy_hi] = low_high(fy);
  if (!fx_lo || !fy_lo) return false;  // Y | p or X | p

  // a divides the lowest coefficients of p(X,0) and p(0,Y); b and c divide
  // the leading ones. a + bX must divide p(X,0) and a + cY must divide p(0,Y).
  std::int64_t dbuf[256];
  std::int64_t as[512];
  int na = 0;
  as[na++] = 0;
  for (int i = 0, k = small_divisors(std::gcd(fx_lo, fy_lo), dbuf); i < k; ++i) {
    as[na++] = dbuf[i];
    as[na++] = -dbuf[i];
  }
  std::int64_t bd[256], cd[256];
  int nb = small_divisors(fx_hi, bd), nc = small_divisors(fy_hi, cd);
  // at most four pairs per a
  struct Pair { std::int64_t a, v; };
  Pair ab[2048], ac[2048];
  int nab = 0, nac = 0;
  for (int ia = 0; ia < na; ++ia) {
    std::int64_t a = as[ia];
    if (a != 0) ab[nab++] = {a, 0};
    for (int ib = 0; ib < nb; ++ib)
      for (std::int64_t b : {bd[ib], -bd[ib]})
        if (cubic_root(fx, a, b)) ab[nab++] = {a, b};
    if (a != 0) ac[nac++] = {a, 0};
    for (int ic = 0; ic < nc; ++ic)
      if (cubic_root(fy, a, cd[ic])) ac[nac++] = {a, cd[ic]};
  }
  for (int i = 0; i < nac; ++i)
    for (int j = 0; j < nab; ++j) {
      auto [a, c] = ac[i];
      auto [a2, b] = ab[j];
      if (a2 != a) continue;
      if (c == 0 && b <= 0) continue;  // sign normalization, degree 1
      if (line_divides(p, a, b, c)) return false;
    }
  return true;
}

bool poly_irreducible_Z(const MPoly& p, const IrreducibilityOptions& opts) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial");
  if (!p.has_integer_coeffs()) throw Error(Errc::InvalidArgument, "coefficients must be integers");
  unsigned d = p.total_degree();
  if (d > opts.degree_bound)
    throw Error(Errc::DegreeBoundExceeded,
                "total degree " + std::to_string(d) + " exceeds bound " +
                    std::to_string(opts.degree_bound));
  BigInt g = content_of(p);
  if (p.is_constant()) {
    if (opts.primitive_only) return true;
    return g == 1 || (g.fits_ulong_p() && is_prime(g.get_ui())) ||
           mpz_probab_prime_p(g.get_mpz_t(), 40) > 0;
  }
  if (g > 1 && !opts.primitive_only) return false;
  MPoly q = primitive_normalize(p);
  if (d == 1) return true;

  std::size_t n = q.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    bool divisible = true;
    for (const auto& [m, c] : q.terms())
      if (i >= m.size() || m[i] == 0) divisible = false;
    if (divisible) return false;
  }

  if (opts.dense_fast_path && n <= 2 && d <= 3) {
    SmallBivariate s;
    bool fits = true;
    for (const auto& [m, c] : q.terms()) {
      if (abs(c) > (1 << 20)) fits = false;
      unsigned i = m.size() > 0 ? m[0] : 0, j = m.size() > 1 ? m[1] : 0;
      for (int k = 0; k < 10; ++k)
        if (kI[k] == static_cast<int>(i) && kJ[k] == static_cast<int>(j))
          s.c[k] = fits ? c.get_num().get_si() : 0;
    }
    if (fits) return poly_irreducible_small(s);
  }

  std::uint64_t budget = opts.candidate_cap;
  for (unsigned k = 1; 2 * k <= d; ++k)
    if (has_factor_of_degree(q, n, k, budget)) return false;
  return true;
}

}  // namespace bsswb
