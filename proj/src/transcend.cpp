#include "bsswb/transcend.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "bsswb/error.hpp"

namespace bsswb {

namespace {

using Matrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns pivot columns (one per
// nonzero row, rows beyond them are dropped).
std::vector<std::size_t> rref(Matrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    Rat inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

Matrix kernel_basis(Matrix a, std::size_t ncols) {
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(ncols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Rows are linear forms in the unknowns given as polynomials: equation
// sum_k u_k * polys[k] = 0, one row per monomial.
Matrix coefficient_system(const std::vector<MPoly>& polys) {
  std::map<Monomial, std::size_t, MonomialLess> rows;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
  std::size_t i = 0;
  for (auto& [m, idx] : rows) idx = i++;
  Matrix a(rows.size(), std::vector<Rat>(polys.size()));
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (const auto& [m, c] : polys[k].terms()) a[rows[m]][k] = c;
  return a;
}

std::optional<Rat> eval_at(const RatFunc& f, const std::vector<Rat>& pt) {
  Rat d = f.den().evaluate(pt, Rat(1));
  if (d == 0) return std::nullopt;
  return f.num().evaluate(pt, Rat(1)) / d;
}

// Greedy row selection over Q: rows independent of all earlier rows.
std::vector<std::size_t> greedy_numeric(const Matrix& rows, std::size_t ncols) {
  std::vector<std::pair<std::vector<Rat>, std::size_t>> piv;  // reduced row, pivot col
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rat> v = rows[i];
    for (const auto& [p, c] : piv)
      if (v[c] != 0) {
        Rat f = v[c] / p[c];
        for (std::size_t k = 0; k < ncols; ++k) v[k] -= f * p[k];
      }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
    if (nz == v.end()) continue;
    std::size_t col = static_cast<std::size_t>(nz - v.begin());
    piv.emplace_back(std::move(v), col);
    basis.push_back(i);
  }
  return basis;
}

bool is_alg_base_member(const RatFunc& b, const Vec& v) {
  auto eq = [&](const FieldElem& x) { return x.is_func() && x.func() == b; };
  return std::any_of(v.context.begin(), v.context.end(), eq) ||
         std::any_of(v.elems.begin(), v.elems.end(), eq);
}

void validate_alg_bases(const Vec& v) {
  for (const auto* list : {&v.context, &v.elems})
    for (const auto& x : *list)
      if (x.is_alg())
        for (const auto& b : x.alg().base())
          if (!is_alg_base_member(b, v))
            throw Error(Errc::InvalidArgument,
                        "base entry " + to_string(b) + " of " + to_string(x) +
                            " is neither in the context nor among the elements");
}

std::vector<RatFunc> funcs_of(const std::vector<FieldElem>& xs, std::vector<std::size_t>* idx = nullptr) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i].is_func()) {
      out.push_back(xs[i].func());
      if (idx) idx->push_back(i);
    }
  return out;
}

std::size_t rank_of(const std::vector<RatFunc>& fs) { return jacobian_basis(fs).size(); }

std::uint64_t default_cap() {
  if (const char* env = std::getenv("BSSWB_CANDIDATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

void monomials_of_degree(std::size_t n, unsigned d, std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {  // X1-major: larger leading exponent first
    cur.push_back(e);
    monomials_of_degree(n, d - e, cur, out);
    cur.pop_back();
  }
}

struct KernelSearch {
  const Matrix& basis;  // RREF, pivot of row r at pivots[r]
  std::vector<int> row_of_pivot;
  std::size_t ncoords, top_block;
  long height;
  std::uint64_t cap, visited = 0;
  std::vector<Rat> coef, x;

  bool dfs(std::size_t j, bool seen_nonzero, bool top_nonzero) {
    if (j == top_block && !top_nonzero) return false;
    if (j == ncoords) return top_nonzero;
    int r = row_of_pivot[j];
    if (r >= 0) {
      for (long k = 0; k <= 2 * height; ++k) {
        long t = (k + 1) / 2 * (k % 2 ? 1 : -1);
        if (!seen_nonzero && t < 0) continue;  // leading coefficient positive
        if (++visited > cap)
          throw Error(Errc::SearchSpaceTooLarge, "candidate cap of " + std::to_string(cap) + " exceeded");
        coef[r] = t;
        x[j] = t;
        if (dfs(j + 1, seen_nonzero || t != 0, top_nonzero || (j < top_block && t != 0))) return true;
      }
      coef[r] = 0;
      return false;
    }
    Rat val = 0;
    for (std::size_t rr = 0; rr < basis.size(); ++rr)
      if (coef[rr] != 0 && basis[rr][j] != 0) val += coef[rr] * basis[rr][j];
    if (!is_integer(val) || abs(val) > height) return false;
    if (!seen_nonzero && val < 0) return false;
    x[j] = val;
    return dfs(j + 1, seen_nonzero || val != 0, top_nonzero || (j < top_block && val != 0));
  }
};

}  // namespace

std::vector<std::size_t> jacobian_basis(const std::vector<RatFunc>& fs) {
  std::size_t m = 0;
  for (const auto& f : fs) m = std::max(m, f.nvars());
  if (m == 0 || fs.empty()) return {};
  std::vector<std::vector<RatFunc>> jac(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) jac[i].push_back(fs[i].derivative(j));

  // full rank at a point decides; otherwise eliminate symbolically
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rat> pt(m);
    for (std::size_t j = 0; j < m; ++j) pt[j] = Rat(static_cast<long>(2 + 3 * j + 5 * attempt + j * j), 1 + attempt);
    Matrix num(fs.size(), std::vector<Rat>(m));
    bool ok = true;
    for (std::size_t i = 0; i < fs.size() && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j) {
        auto v = eval_at(jac[i][j], pt);
        if (!v) ok = false;
        else num[i][j] = *v;
      }
    if (!ok) continue;
    auto b = greedy_numeric(num, m);
    if (b.size() == fs.size()) return b;
    break;
  }

  std::vector<std::pair<std::vector<RatFunc>, std::size_t>> piv;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::vector<RatFunc> v = jac[i];
    for (const auto& [p, c] : piv)
      if (!v[c].is_zero()) {
        RatFunc f = v[c] / p[c];
        for (std::size_t k = c; k < m; ++k)
          if (!p[k].is_zero()) v[k] -= f * p[k];
      }
    std::size_t c = 0;
    while (c < m && v[c].is_zero()) ++c;
    if (c == m) continue;
    piv.emplace_back(std::move(v), c);
    basis.push_back(i);
  }
  return basis;
}

TrdegReport trdeg(const Vec& v, Over over) {
  validate_alg_bases(v);
  std::vector<std::size_t> elem_idx;
  std::vector<RatFunc> rows;
  std::size_t offset = 0;
  if (over == Over::Context) {
    rows = funcs_of(v.context);
    offset = rows.size();
  }
  auto ef = funcs_of(v.elems, &elem_idx);
  rows.insert(rows.end(), ef.begin(), ef.end());
  TrdegReport r;
  r.method = TrdegMethod::Jacobian;
  for (auto i : jacobian_basis(rows))
    if (i >= offset) r.basis.push_back(elem_idx[i - offset]);
  r.trdeg = static_cast<unsigned>(r.basis.size());
  return r;
}

bool algebraically_independent(const Vec& v, Over over) {
  for (const auto& x : v.elems)
    if (x.is_alg()) return false;
  return trdeg(v, over).trdeg == v.elems.size();
}

TrdegReport max_independent_subset(const Vec& v) {
  std::size_t n = v.elems.size();
  if (n > 12) throw Error(Errc::SubsetSearchTooLarge, "subset search limited to 12 elements");
  validate_alg_bases(v);
  std::vector<RatFunc> ctx = funcs_of(v.context);
  std::map<unsigned, std::size_t> memo;
  auto rank = [&](unsigned mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<RatFunc> rows = ctx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1 && v.elems[i].is_func()) rows.push_back(v.elems[i].func());
    return memo[mask] = rank_of(rows);
  };
  unsigned full = (1u << n) - 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    // removed sets of size k in increasing mask order
    for (unsigned removed = 0; removed <= full; ++removed) {
      if (static_cast<std::size_t>(__builtin_popcount(removed)) != k) continue;
      unsigned rest = full & ~removed;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (removed >> j & 1 && v.elems[j].is_func()) ok = rank(rest | (1u << j)) == rank(rest);
      if (!ok) continue;
      TrdegReport r;
      r.method = TrdegMethod::RankFormula;
      r.trdeg = static_cast<unsigned>(n - k);
      for (std::size_t i = 0; i < n; ++i)
        if (rest >> i & 1) r.basis.push_back(i);
      return r;
    }
  }
  return {};
}

std::optional<DepWitness> find_dependence(const Vec& v, unsigned degree_bound, unsigned height_bound,
                                          std::optional<std::uint64_t> cap) {
  if (degree_bound < 1 || height_bound < 1) throw Error(Errc::InvalidArgument, "bounds must be at least 1");
  if (!v.context.empty()) throw Error(Errc::InvalidArgument, "dependence search works over Q only");
  for (const auto& x : v.elems)
    if (x.is_alg()) throw Error(Errc::InvalidArgument, "dependence search needs rational functions");
  std::size_t n = v.elems.size();
  if (n == 0) return std::nullopt;
  std::uint64_t limit = cap ? *cap : default_cap();
  std::uint64_t visited = 0;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    std::vector<Monomial> coords;
    std::size_t top = 0;
    for (unsigned dd = d + 1; dd-- > 0;) {
      std::vector<std::uint32_t> cur;
      monomials_of_degree(n, dd, cur, coords);
      if (dd == d) top = coords.size();
    }
    std::vector<MPoly> images;
    for (const auto& a : coords) {
      MPoly p(1L);
      for (std::size_t i = 0; i < n; ++i) {
        const RatFunc& f = v.elems[i].func();
        p *= f.num().pow(a[i]) * f.den().pow(d - a[i]);
      }
      images.push_back(std::move(p));
    }
    Matrix kernel = kernel_basis(coefficient_system(images), coords.size());
    if (kernel.empty()) continue;
    auto pivots = rref(kernel, coords.size());
    KernelSearch s{kernel, std::vector<int>(coords.size(), -1), coords.size(), top,
                   static_cast<long>(height_bound), limit - visited, 0,
                   std::vector<Rat>(kernel.size()), std::vector<Rat>(coords.size())};
    for (std::size_t r = 0; r < pivots.size(); ++r) s.row_of_pivot[pivots[r]] = static_cast<int>(r);
    bool found = s.dfs(0, false, false);
    visited += s.visited;
    if (!found) continue;
    MPoly poly;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      Monomial m = coords[j];
      trim(m);
      if (s.x[j] != 0) poly.add_term(m, s.x[j]);
    }
    std::vector<RatFunc> vals;
    for (const auto& x : v.elems) vals.push_back(x.func());
    if (!poly.evaluate(vals, RatFunc(1)).is_zero())
      throw std::logic_error("dependence witness does not vanish");
    return DepWitness{poly, degree_bound, height_bound};
  }
  return std::nullopt;
}

unsigned kd_complexity(const Vec& v) {
  if (v.elems.empty()) throw Error(Errc::EmptyVector, "K^d needs a nonempty vector");
  return std::max(1u, trdeg(v, Over::Context).trdeg);
}

bool in_generated_field(const RatFunc& x, const std::vector<RatFunc>& gens, unsigned degree_bound) {
  if (x.is_constant()) return true;
  for (const auto& g : gens)
    if (g == x) return true;
  std::size_t k = gens.size();
  if (k == 0) return false;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    std::vector<Monomial> mons;
    for (unsigned dd = 0; dd <= d; ++dd) {
      std::vector<std::uint32_t> cur;
      monomials_of_degree(k, dd, cur, mons);
    }
    // x * Q(g) - P(g) = 0 with denominators cleared.
    std::vector<MPoly> cols;
    for (int part = 0; part < 2; ++part)
      for (const auto& a : mons) {
        MPoly g(1L);
        for (std::size_t i = 0; i < k; ++i) g *= gens[i].num().pow(a[i]) * gens[i].den().pow(d - a[i]);
        cols.push_back(part == 0 ? x.num() * g : -(x.den() * g));
      }
    if (!kernel_basis(coefficient_system(cols), cols.size()).empty()) return true;
  }
  return false;
}

KoReport ko_bounds(const Vec& v) {
  if (v.elems.empty()) throw Error(Errc::EmptyVector, "K^o needs a nonempty vector");
  TrdegReport t = trdeg(v, Over::Context);
  unsigned d = t.trdeg;
  KoReport r;
  r.lower = std::max(1u, d);
  r.upper = d + 1;
  if (r.lower == r.upper) {
    r.exact = r.lower;
    r.certificate = "bounds";
    return r;
  }
  std::vector<std::size_t> algs;
  for (std::size_t i = 0; i < v.elems.size(); ++i)
    if (v.elems[i].is_alg()) algs.push_back(i);
  bool ctx_func = std::all_of(v.context.begin(), v.context.end(), [](const FieldElem& z) { return z.is_func(); });
  std::vector<RatFunc> ctx = funcs_of(v.context);

  if (algs.empty() && ctx_func && rank_of(ctx) == ctx.size()) {
    std::vector<RatFunc> gens = ctx;
    for (auto i : t.basis) gens.push_back(v.elems[i].func());
    bool all_in = true;
    for (const auto& x : v.elems)
      if (!in_generated_field(x.func(), gens)) {
        all_in = false;
        break;
      }
    if (all_in) {
      r.exact = d;
      r.certificate = "purely-transcendental";
      return r;
    }
  }
  if (algs.empty() && d == 1 && rank_of(ctx) == 0 && ctx_func) {
    // trdeg-1 subfields of Q(T1..Tm) are simple
    r.exact = 1;
    r.certificate = "lueroth-simple";
    return r;
  }
  if (algs.size() == 1 && d == 1 && ctx_func) {
    const AlgElem& a = v.elems[algs[0]].alg();
    bool base_in_context = std::all_of(a.base().begin(), a.base().end(), [&](const RatFunc& b) {
      return std::any_of(v.context.begin(), v.context.end(),
                         [&](const FieldElem& z) { return z.is_func() && z.func() == b; });
    });
    if (base_in_context && a.degree() <= 2 && !has_rational_function_root(a.minpoly())) {
      r.exact = 2;
      r.certificate = "lueroth";
      return r;
    }
  }
  return r;
}

bool kolmogorov_set_member(const Vec& v, unsigned k) {
  if (v.elems.empty()) throw Error(Errc::EmptyVector, "Kolmogorov set membership needs a nonempty vector");
  if (k == 0) return false;
  validate_alg_bases(v);
  std::vector<RatFunc> ctx = funcs_of(v.context);
  std::vector<RatFunc> fs = funcs_of(v.elems);
  std::size_t need = k + 1;
  if (fs.size() < need) return true;
  std::size_t base = rank_of(ctx);
  // Look for k+1 elements independent over Q(context).
  std::vector<std::size_t> pick(need);
  for (std::size_t i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    std::vector<RatFunc> rows = ctx;
    for (auto i : pick) rows.push_back(fs[i]);
    if (rank_of(rows) == base + need) return false;
    std::size_t i = need;
    while (i-- > 0 && pick[i] == fs.size() - need + i) {
    }
    if (i == static_cast<std::size_t>(-1)) return true;
    ++pick[i];
    for (std::size_t j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Oracle iz_oracle(std::vector<FieldElem> context) {
  return [context = std::move(context)](const std::vector<FieldElem>& q) {
    return algebraically_independent(Vec{q, context}, Over::Context);
  };
}

std::string to_string(TrdegMethod m) {
  switch (m) {
    case TrdegMethod::Jacobian: return "jacobian";
    case TrdegMethod::RankFormula: return "rank-formula";
    case TrdegMethod::BruteForce: return "brute-force";
  }
  return "?";
}

std::string to_string(const TrdegReport& r) {
  std::string s = "trdeg=" + std::to_string(r.trdeg) + " basis=[";
  for (std::size_t i = 0; i < r.basis.size(); ++i) s += (i ? "," : "") + std::to_string(r.basis[i]);
  return s + "] method=" + to_string(r.method);
}

std::string to_string(const KoReport& r) {
  std::string s = "ko lower=" + std::to_string(r.lower) + " upper=" + std::to_string(r.upper);
  if (r.exact) return s + " exact=" + std::to_string(*r.exact) + " cert=" + r.certificate;
  return s + " exact=none";
}

std::string witness_string(const MPoly& p) {
  return to_string(p, [](std::size_t i) { return "X" + std::to_string(i + 1); }, true);
}

}  // namespace bsswb
