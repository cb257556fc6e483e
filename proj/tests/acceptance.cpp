// Acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>

#include "bsswb/bsswb.hpp"

using namespace bsswb;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail, double seconds) {
  std::printf("%s [%d] %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Runs `body` (which fills detail and returns success) with a time limit.
void criterion(int id, const std::string& what, double limit_s, const std::function<bool(std::string&)>& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    ok = false;
    detail += " over time limit";
  }
  report(id, ok, what, detail, s);
}

RatFunc T(unsigned i) { return RatFunc::symbol(Symbol{i}); }

FieldElem random_monomial(std::mt19937_64& rng, unsigned symbols, unsigned max_deg) {
  std::uniform_int_distribution<int> coef(1, 3), sym(1, static_cast<int>(symbols)), deg(0, static_cast<int>(max_deg));
  RatFunc f(Rat(coef(rng) * (rng() % 2 ? 1 : -1)));
  for (int k = deg(rng); k > 0; --k) f *= T(static_cast<unsigned>(sym(rng)));
  return f;
}

std::vector<FieldElem> random_funcs(std::mt19937_64& rng, std::size_t n, unsigned symbols, unsigned max_deg) {
  std::vector<FieldElem> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_monomial(rng, symbols, max_deg));
  return v;
}

// Degree-2 algebraic element: sqrt of a rational or of an earlier element.
FieldElem random_quadratic(std::mt19937_64& rng, const std::vector<FieldElem>& earlier) {
  std::vector<const FieldElem*> funcs;
  for (const auto& x : earlier)
    if (x.is_func() && !x.func().is_zero()) funcs.push_back(&x);
  if (funcs.empty() || rng() % 2) {
    static const char* roots[] = {"alg(Z^2 - 2, 1, 2)", "alg(Z^2 - 3, -2, -1)", "alg(Z^2 - Z - 1, 1, 2)"};
    return parse_field_elem(roots[rng() % 3]);
  }
  const RatFunc& b = funcs[rng() % funcs.size()]->func();
  return AlgElem::make({b}, {-b, RatFunc(), RatFunc(1)}, std::nullopt);
}

// Ternary-digit reference for Cantor levels: excluded at level L iff
// frac(3^(L-1) q) lies in (1/3, 2/3) and floor(3^(L-1) q) has only digits 0, 2.
unsigned excluded_level_by_digits(const Rat& q, unsigned depth) {
  BigInt pow3 = 1;
  for (unsigned level = 1; level <= depth; ++level, pow3 *= 3) {
    Rat u = q * Rat(pow3);
    BigInt k = u.get_num() / u.get_den();
    Rat f = u - Rat(k);
    if (f > Rat(1, 3) && f < Rat(2, 3)) {
      bool digits_ok = true;
      for (BigInt r = k; r > 0 && digits_ok; r /= 3)
        if (BigInt(r % 3) == 1) digits_ok = false;
      if (digits_ok) return level;
    }
  }
  return 0;
}

// ---- product oracle for bivariate cubics with coefficients in [-3, 3] ----

constexpr int kI[10] = {0, 1, 0, 2, 1, 0, 3, 2, 1, 0};
constexpr int kJ[10] = {0, 0, 1, 0, 1, 2, 0, 1, 2, 3};
constexpr std::uint64_t kGrid = 282475249ULL;  // 7^10

int coef_index(int i, int j) {
  for (int k = 0; k < 10; ++k)
    if (kI[k] == i && kJ[k] == j) return k;
  return -1;
}

std::uint64_t grid_index(const std::array<int, 10>& c) {
  std::uint64_t idx = 0;
  for (int k = 9; k >= 0; --k) idx = idx * 7 + static_cast<std::uint64_t>(c[k] + 3);
  return idx;
}

// Marks every L * Q in the grid with L = a + bX + cY of degree 1 and Q of
// degree 1 or 2. Nonzero coefficients of L are extreme coefficients of the
// product under some lex order, so they lie in [-3, 3]. Q's monomials are
// fixed in increasing lex order (X > Y); the product coefficient at t0*m
// (t0 the lex-smallest monomial of L) equals L_t0 * Q_m plus already fixed
// terms, leaving at most seven values for Q_m.
void mark_products(std::vector<bool>& reducible) {
  // Q monomials (i, j) in increasing lex order with X > Y
  const int qi[6] = {0, 0, 0, 1, 1, 2}, qj[6] = {0, 1, 2, 0, 1, 0};
  for (int c = -3; c <= 3; ++c)
    for (int b = -3; b <= 3; ++b)
      for (int a = -3; a <= 3; ++a) {
        if (b == 0 && c == 0) continue;
        if (c < 0 || (c == 0 && b < 0)) continue;  // L and -L give the same products
        const int L[3] = {a, b, c};           // 1, X, Y
        const int li[3] = {0, 1, 0}, lj[3] = {0, 0, 1};
        int t0 = a != 0 ? 0 : (c != 0 ? 2 : 1);  // lex-smallest: 1 < Y < X
        std::array<long, 6> q{};
        std::function<void(int)> rec = [&](int m) {
          if (m == 6) {
            bool nonconstant = false;
            for (int k = 1; k < 6; ++k) nonconstant |= q[k] != 0;
            if (!nonconstant) return;
            std::array<int, 10> prod{};
            for (int u = 0; u < 3; ++u)
              for (int v = 0; v < 6; ++v) {
                long val = L[u] * q[v];
                if (!val) continue;
                long nv = prod[coef_index(li[u] + qi[v], lj[u] + qj[v])] + val;
                prod[coef_index(li[u] + qi[v], lj[u] + qj[v])] = static_cast<int>(nv);
              }
            for (int k = 0; k < 10; ++k)
              if (prod[k] < -3 || prod[k] > 3) return;
            reducible[grid_index(prod)] = true;
            return;
          }
          // coefficient of t0 * m from L_t * Q_m' with m' already chosen
          int ti = li[t0] + qi[m], tj = lj[t0] + qj[m];
          long rest = 0;
          for (int u = 0; u < 3; ++u) {
            if (u == t0 || !L[u]) continue;
            int mi = ti - li[u], mj = tj - lj[u];
            if (mi < 0 || mj < 0) continue;
            for (int v = 0; v < m; ++v)
              if (qi[v] == mi && qj[v] == mj) rest += L[u] * q[v];
          }
          long lt = L[t0];
          for (long target = -3; target <= 3; ++target) {
            long num = target - rest;
            if (num % lt) continue;
            q[m] = num / lt;
            rec(m + 1);
          }
          q[m] = 0;
        };
        rec(0);
      }
}

// Reference verdict: constants in range are irreducible (units and primes);
// otherwise reducible iff content > 1 or the product oracle marked it.
bool reference_irreducible(const std::array<int, 10>& c, bool marked) {
  int g = 0;
  bool constant = true;
  for (int k = 0; k < 10; ++k) {
    g = std::gcd(g, c[k]);
    if (k > 0 && c[k]) constant = false;
  }
  if (constant) return true;
  return g == 1 && !marked;
}

}  // namespace

int main() {
  std::printf("bsswb acceptance\n");

  criterion(1, "kd = max(1, trdeg) on 200 random vectors", 60, [](std::string& d) {
    std::mt19937_64 rng(2024);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      std::size_t n = 1 + rng() % 4;
      unsigned symbols = 1 + rng() % 3;
      std::vector<FieldElem> elems;
      for (std::size_t k = 0; k < n; ++k) {
        if (rng() % 4 == 0) elems.push_back(random_quadratic(rng, elems));
        else elems.push_back(random_monomial(rng, symbols, 3));
      }
      Vec v{elems, {}};
      unsigned by_subsets = max_independent_subset(v).trdeg;
      if (trdeg(v).trdeg != by_subsets || kd_complexity(v) != std::max(1u, by_subsets)) ++bad;
    }
    d = std::to_string(200 - bad) + "/200 agree";
    return bad == 0;
  });

  criterion(2, "ko_bounds((T1..Tn)) exact = n for n = 1..6", 5, [](std::string& d) {
    bool ok = true;
    for (unsigned n = 1; n <= 6; ++n) {
      std::vector<FieldElem> v;
      for (unsigned i = 1; i <= n; ++i) v.push_back(T(i));
      auto r = ko_bounds(Vec{v, {}});
      d += (n > 1 ? " " : "") + std::string("n=") + std::to_string(n) + ":" +
           (r.exact ? std::to_string(*r.exact) : "none");
      ok = ok && r.exact == n;
    }
    return ok;
  });

  criterion(3, "ko_bounds((T1, sqrt 2)) exact 2 lueroth, kd = 1", 0, [](std::string& d) {
    Vec v{{T(1), parse_field_elem("alg(Z^2 - 2, 1, 2)")}, {}};
    auto r = ko_bounds(v);
    unsigned kd = kd_complexity(v);
    d = to_string(r) + " kd=" + std::to_string(kd);
    return r.exact == 2u && r.certificate == "lueroth" && r.lower == 1 && r.upper == 2 && kd == 1;
  });

  criterion(4, "Jacobian independence = no witness at bounds (4,4) on the monomial grid", 600, [](std::string& d) {
    std::vector<FieldElem> atoms;
    atoms.push_back(RatFunc());
    for (int c : {-2, -1, 1, 2})
      for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b) atoms.push_back(T(1).pow(a) * T(2).pow(b) * Rat(c));
    std::size_t total = 0, bad = 0, taller = 0;
    std::string example;
    std::function<void(std::vector<FieldElem>&)> rec = [&](std::vector<FieldElem>& cur) {
      Vec v{cur, {}};
      ++total;
      bool indep = algebraically_independent(v);
      bool none = !find_dependence(v, 4, 4).has_value();
      if (indep != none) {
        if (++bad == 1) example = to_string(cur);
        // is the relation merely taller than the height bound?
        if (!indep && find_dependence(v, 4, 64)) ++taller;
      }
      if (cur.size() == 3) return;
      for (const auto& x : atoms) {
        cur.push_back(x);
        rec(cur);
        cur.pop_back();
      }
    };
    std::vector<FieldElem> start;
    rec(start);
    d = std::to_string(total - bad) + "/" + std::to_string(total) + " agree";
    if (bad)
      d += "; " + std::to_string(taller) + " of " + std::to_string(bad) +
           " mismatches are dependent with witnesses only above height 4 (first " + example + ")";
    return bad == 0;
  });

  criterion(5, "unpair(pair(n, x)) = (n, x) on n <= 16, |num| <= 1024, den <= 64", 60, [](std::string& d) {
    std::size_t total = 0, bad = 0;
    for (long n = 0; n <= 16; ++n)
      for (long q = 1; q <= 64; ++q)
        for (long p = -1024; p <= 1024; ++p) {
          Rat x(p, q);
          x.canonicalize();
          ++total;
          if (unpair(pair(n, x)) != std::pair<BigInt, Rat>(n, x)) ++bad;
        }
    d = std::to_string(bad) + " failures in " + std::to_string(total);
    return bad == 0;
  });

  auto corpus = load_corpus(BSSWB_CORPUS_DIR);
  Oracle iz = iz_oracle({});

  criterion(6, "universal_run(encode(P)) = run(P) incl. steps, budgets 10/100/10000", 0, [&](std::string& d) {
    std::size_t total = 0, bad = 0;
    for (const auto& e : corpus) {
      auto code = encode_machine(e.program);
      const Oracle* o = e.program.oracle ? &iz : nullptr;
      for (const auto& c : e.cases)
        for (std::uint64_t b : {10, 100, 10000}) {
          ++total;
          if (describe(universal_run(code, c.input, b, SymbolicInfinite{}, o)) !=
              describe(run(e.program, c.input, b, SymbolicInfinite{}, o)))
            ++bad;
        }
    }
    d = std::to_string(corpus.size()) + " programs, " + std::to_string(bad) + " mismatches in " +
        std::to_string(total);
    return corpus.size() == 6 && bad == 0;
  });

  criterion(7, "size(encode(P)) = max(1, J) on the corpus", 0, [&](std::string& d) {
    bool ok = true;
    for (const auto& e : corpus) {
      std::size_t size = encode_machine(e.program).size();
      std::size_t want = std::max<std::size_t>(1, e.program.constants.size());
      d += (d.empty() ? "" : " ") + e.name + "=" + std::to_string(size);
      ok = ok && size == want;
    }
    return ok;
  });

  criterion(8, "quine outputs its own payload", 0, [](std::string& d) {
    auto q = make_quine();
    auto r = universal_run(q, {}, 100);
    bool ok = std::holds_alternative<Output>(r) && to_string(std::get<Output>(r).values) == to_string(q.payload);
    d = "payload size " + std::to_string(q.size()) + ", " + std::to_string(to_string(q.payload).size()) +
        " characters, " + (ok ? "identical" : "different: " + to_string(r));
    return ok;
  });

  criterion(9, "trdeg tower additivity on 100 random instances", 0, [](std::string& d) {
    std::mt19937_64 rng(99);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      auto ctx = random_funcs(rng, rng() % 3, 3, 3);
      auto elems = random_funcs(rng, 1 + rng() % 3, 3, 3);
      if (rng() % 3 == 0) elems.push_back(random_quadratic(rng, ctx));
      auto all = ctx;
      all.insert(all.end(), elems.begin(), elems.end());
      unsigned whole = trdeg(Vec{all, {}}).trdeg;
      unsigned parts = trdeg(Vec{ctx, {}}).trdeg + trdeg(Vec{elems, ctx}, Over::Context).trdeg;
      if (whole != parts) ++bad;
    }
    d = std::to_string(100 - bad) + "/100 additive";
    return bad == 0;
  });

  criterion(10, "Cantor complement semi-decision and depth test", 0, [](std::string& d) {
    Program p = cantor_program();
    // 20 points of removed intervals at levels 1..6: centers and quarter points
    std::vector<std::pair<Rat, unsigned>> excluded;
    for (unsigned level = 1; level <= 6 && excluded.size() < 20; ++level) {
      BigInt pow3 = 1;
      for (unsigned i = 0; i < level; ++i) pow3 *= 3;
      // left-most removed interval of this level: (1/3^level, 2/3^level)
      for (Rat off : {Rat(3, 2), Rat(5, 4), Rat(7, 4)})
        if (excluded.size() < 20) excluded.emplace_back(off / Rat(pow3), level);
      // right-most: 1 - those
      if (level > 1 && excluded.size() < 20) excluded.emplace_back(1 - Rat(3, 2) / Rat(pow3), level);
    }
    int bad = 0;
    for (const auto& [q, level] : excluded) {
      if (excluded_level_by_digits(q, 8) != level) ++bad;
      if (to_string(run(p, {FieldElem(RatFunc(q))}, 100000)) != "output=[]") ++bad;
    }
    for (Rat q : {Rat(1, 4), Rat(1, 3), Rat(0), Rat(1)})
      if (!std::holds_alternative<Exhausted>(run(p, {FieldElem(RatFunc(q))}, 100000))) ++bad;
    std::size_t checked = 0;
    for (long den = 1; den <= 81; ++den)
      for (long num = 0; num <= den; ++num)
        for (unsigned depth = 1; depth <= 8; ++depth) {
          Rat q(num, den);
          q.canonicalize();
          auto v = cantor_member_depth(q, depth);
          unsigned want = excluded_level_by_digits(q, depth);
          bool same = want == 0 ? v.kind == CantorVerdict::Kind::InPrefix
                                : v == CantorVerdict{CantorVerdict::Kind::Excluded, want};
          ++checked;
          if (!same) ++bad;
        }
    d = std::to_string(excluded.size()) + " accepted points, 4 rejected points, " + std::to_string(checked) +
        " depth checks, " + std::to_string(bad) + " failures";
    return bad == 0 && excluded.size() == 20;
  });

  criterion(11, "poly_irreducible_Z = product oracle on all bivariate cubics, |coef| <= 3", 600, [](std::string& d) {
    std::vector<bool> reducible(kGrid, false);
    mark_products(reducible);
    std::size_t total = 0, bad = 0, irreducible = 0;
    std::array<int, 10> c{};
    for (int k = 0; k < 10; ++k) c[k] = -3;
    SmallBivariate sb;
    for (std::uint64_t idx = 0; idx < kGrid; ++idx) {
      // c is the base-7 expansion of idx (digit k = coefficient k + 3)
      bool zero = true;
      for (int k = 0; k < 10; ++k) {
        sb.c[k] = c[k];
        zero = zero && c[k] == 0;
      }
      if (!zero) {
        ++total;
        bool ref = reference_irreducible(c, reducible[idx]);
        bool got = poly_irreducible_small(sb);
        irreducible += got;
        if (ref != got) ++bad;
      }
      for (int k = 0; k < 10; ++k) {
        if (++c[k] <= 3) break;
        c[k] = -3;
      }
    }
    // the general interpolation path on a deterministic sample
    std::mt19937_64 rng(5);
    std::size_t sampled = 0, bad_general = 0;
    IrreducibilityOptions general;
    general.dense_fast_path = false;
    while (sampled < 3000) {
      std::array<int, 10> s{};
      bool zero = true;
      for (auto& x : s) {
        x = static_cast<int>(rng() % 7) - 3;
        zero = zero && x == 0;
      }
      if (zero) continue;
      ++sampled;
      for (int k = 0; k < 10; ++k) sb.c[k] = s[k];
      if (poly_irreducible_Z(to_mpoly(sb), general) != reference_irreducible(s, reducible[grid_index(s)]))
        ++bad_general;
    }
    d = std::to_string(bad) + " mismatches in " + std::to_string(total) + " (" + std::to_string(irreducible) +
        " irreducible); general path " + std::to_string(bad_general) + " mismatches in " + std::to_string(sampled);
    return bad == 0 && bad_general == 0;
  });

  criterion(12, "trdeg conserved by halting corpus runs", 0, [&](std::string& d) {
    std::size_t halting = 0, bad = 0;
    for (const auto& e : corpus) {
      const Oracle* o = e.program.oracle ? &iz : nullptr;
      for (const auto& c : e.cases) {
        auto r = run(e.program, c.input, c.budget, SymbolicInfinite{}, o);
        auto* out = std::get_if<Output>(&r);
        if (!out) continue;
        ++halting;
        std::vector<FieldElem> before = e.program.constants;
        before.insert(before.end(), c.input.begin(), c.input.end());
        auto after = before;
        after.insert(after.end(), out->values.begin(), out->values.end());
        if (trdeg(Vec{after, {}}).trdeg != trdeg(Vec{before, {}}).trdeg) ++bad;
      }
    }
    d = std::to_string(halting) + " halting runs, " + std::to_string(bad) + " violations";
    return bad == 0 && halting > 0;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
