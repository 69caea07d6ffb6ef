#include <numeric>
#include <random>

#include "cases.hpp"
#include "scv/characters.hpp"
#include "scv/error.hpp"
#include "scv/primes.hpp"

namespace scv::detail {

namespace {

std::int64_t to_i(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::optional<Record> odd(std::uint64_t p) {
  if (p == 2) return skip(p, "needs an odd prime");
  return std::nullopt;
}

std::optional<Record> at_least_7(std::uint64_t p) {
  if (p < 7) return skip(p, "needs p >= 7");
  return std::nullopt;
}

std::optional<Record> one_mod_5(std::uint64_t p) {
  if (p % 5 != 1) return skip(p, "needs p = 1 mod 5");
  return std::nullopt;
}

std::string tuple_str(const std::vector<std::int64_t>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

// Exponent tuples for character sums: everything when small, otherwise a
// seeded sample with a share of tuples whose product character is trivial.
std::vector<std::vector<std::int64_t>> exponent_tuples(std::uint64_t p, unsigned r, std::size_t limit) {
  const std::uint64_t n = p - 1;
  std::vector<std::vector<std::int64_t>> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < r; ++i) total *= n;
  if (total <= limit) {
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> e;
      for (std::uint64_t c = code, i = 0; i < r; ++i, c /= n) e.push_back(to_i(c % n));
      out.push_back(std::move(e));
    }
    return out;
  }
  std::mt19937_64 rng(p * 1000003 + r);
  for (std::size_t s = 0; s < limit; ++s) {
    std::vector<std::int64_t> e;
    std::int64_t sum = 0;
    for (unsigned i = 0; i < r; ++i) {
      const auto v = (rng() % 4 == 0) ? 0 : to_i(rng() % n);
      e.push_back(v);
      sum += v;
    }
    if (s % 3 == 0) e.back() = ((e.back() - sum) % to_i(n) + to_i(n)) % to_i(n);
    out.push_back(std::move(e));
  }
  return out;
}

bool all_zero_mod(const std::vector<std::int64_t>& e, std::uint64_t n) {
  for (auto v : e) {
    if (v % to_i(n) != 0) return false;
  }
  return true;
}

std::int64_t sum_of(const std::vector<std::int64_t>& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

// Sample points of Z_p for the Gamma_p property checks.
std::vector<Rational> gamma_samples(std::uint64_t p) {
  std::vector<Rational> out;
  for (std::int64_t n = 0; n <= 10; ++n) out.push_back(frac(n, 1));
  const std::int64_t q = to_i(p);
  for (std::int64_t n : {q - 1, q, q + 1, std::int64_t{-1}, -q}) out.push_back(frac(n, 1));
  for (std::int64_t b = 2; b <= 7; ++b) {
    if (b % to_i(p) == 0) continue;
    for (std::int64_t a = -1; a < 2 * b; ++a) {
      if (a != 0 && std::gcd(a, b) == 1) out.push_back(frac(a, b));
    }
  }
  return out;
}

bool is_unit(const Rational& x, std::uint64_t p) { return mod_u64(x.get_num(), p) != 0; }

CaseDef make(std::string name, std::string statement, unsigned k, unsigned min_k, unsigned max_k, CheckFn fn,
             std::uint64_t lo = 3, std::uint64_t hi = 61) {
  CaseDef c;
  c.info = CaseInfo{std::move(name), std::move(statement), false, k, lo, hi};
  c.min_k = min_k;
  c.max_k = max_k;
  c.check = std::move(fn);
  return c;
}

Record orthogonality(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  ResidueRing ring(p, ctx.k);
  TeichmullerChar chars(ring);
  Tally t;
  for (std::uint64_t n = 0; n + 1 < p; ++n) {
    Residue sum = ring.zero();
    for (std::uint64_t x = 0; x < p; ++x) sum += chars.value(to_i(n), to_i(x));
    t.check(sum == ring(n == 0 ? to_i(p) - 1 : 0), [&] { return "sum_x T^" + std::to_string(n) + "(x)"; });
  }
  for (std::uint64_t x = 0; x < p; ++x) {
    Residue sum = ring.zero();
    for (std::uint64_t n = 0; n + 1 < p; ++n) sum += chars.value(to_i(n), to_i(x));
    t.check(sum == ring(x == 1 ? to_i(p) - 1 : 0), [&] { return "sum_n T^n(" + std::to_string(x) + ")"; });
  }
  return t.record(p, ring.modulus());
}

Record gauss_conjugate(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  const ResidueRing& ring = table.ring();
  GaussSums G(table);
  TeichmullerChar chars(ring);
  Tally t;
  for (std::int64_t j = 0; j < to_i(p) - 1; ++j) {
    const Residue expect = j == 0 ? ring.one() : chars.value(j, -1) * to_i(p);
    t.check((G(j) * G(-j)).to_pi_adic() == PiAdicElement::scalar(expect),
            [&] { return "G_" + std::to_string(j) + " G_-" + std::to_string(j); });
  }
  return t.record(p, ring.modulus());
}

Record hasse_davenport(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  const ResidueRing& ring = table.ring();
  GaussSums G(table);
  TeichmullerChar chars(ring);
  Tally t;
  const std::int64_t n = to_i(p) - 1;
  for (std::int64_t m = 2; m <= 6; ++m) {
    if (n % m != 0) continue;
    const std::int64_t step = n / m;  // chi = T^step has order m
    GaussMonomial fixed{ring.one(), 0};
    for (std::int64_t i = 1; i < m; ++i) fixed = fixed * G(i * step);
    for (std::int64_t e = 0; e < n; ++e) {
      GaussMonomial lhs{ring.one(), 0};
      for (std::int64_t i = 0; i < m; ++i) lhs = lhs * G(i * step + e);
      GaussMonomial rhs = G(m * e) * fixed * chars.value(-m * e, m);
      t.check(lhs.to_pi_adic() == rhs.to_pi_adic(),
              [&] { return "m = " + std::to_string(m) + ", psi = T^" + std::to_string(e); });
    }
  }
  return t.record(p, ring.modulus());
}

Record jacobi_basic(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  ResidueRing ring(p, ctx.k);
  TeichmullerChar chars(ring);
  Tally t;
  const std::int64_t ee[] = {0, 0};
  t.check(jacobi_sum(ee, chars) == ring(to_i(p) - 2), "J(eps,eps)");
  for (std::int64_t n = 1; n < to_i(p) - 1; ++n) {
    const std::int64_t a[] = {0, n};
    const std::int64_t b[] = {n, -n};
    t.check(jacobi_sum(a, chars) == ring(-1), [&] { return "J(eps,T^" + std::to_string(n) + ")"; });
    t.check(jacobi_sum(b, chars) == -chars.value(n, -1), [&] { return "J(T^n,T^-n), n = " + std::to_string(n); });
  }
  return t.record(p, ring.modulus());
}

Record jacobi_reduction(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  const std::uint64_t n = p - 1;
  ResidueRing ring(p, ctx.k);
  TeichmullerChar chars(ring);
  Tally t;
  for (unsigned r = 2; r <= 4; ++r) {
    for (const auto& e : exponent_tuples(p, r, r == 4 ? 40 : 300)) {
      t.check(jacobi_by_reduction(e, chars) == jacobi_sum(e, chars), [&] { return "reduction at " + tuple_str(e); });
      if (sum_of(e) % to_i(n) == 0 && !all_zero_mod(e, n)) {
        const std::vector<std::int64_t> head(e.begin(), e.end() - 1);
        t.check(jacobi_sum(e, chars) == -chars.value(e.back(), -1) * jacobi_sum(head, chars),
                [&] { return "trivial product at " + tuple_str(e); });
      }
    }
  }
  for (unsigned r = 1; r <= 4; ++r) {
    std::vector<std::int64_t> zeros(r, 0);
    BigInt num = 1;
    for (unsigned i = 0; i < r; ++i) num *= to_bigint(n);
    num += (r % 2) ? 1 : -1;
    Rational closed(num, to_bigint(p));
    closed.canonicalize();
    t.check(jacobi_sum(zeros, chars) == reduce_rational(closed, ring),
            [&] { return "all trivial, r = " + std::to_string(r); });
  }
  return t.record(p, ring.modulus());
}

Record jacobi_gauss(const Context& ctx, bool pairs_only) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  const ResidueRing& ring = table.ring();
  GaussSums G(table);
  TeichmullerChar chars(ring);
  Tally t;
  for (unsigned r = 2; r <= (pairs_only ? 2u : 4u); ++r) {
    const std::size_t limit = pairs_only ? (p <= 31 ? 1000 : 400) : 60;
    for (const auto& e : exponent_tuples(p, r, limit)) {
      if (all_zero_mod(e, p - 1)) {
        bool refused = false;
        try {
          jacobi_from_gauss(e, G);
        } catch (const Error& err) {
          refused = err.kind() == ErrorKind::BadRange;
        }
        t.check(refused, "all-trivial tuple must be refused");
        continue;
      }
      t.check(jacobi_from_gauss(e, G) == jacobi_sum(e, chars), [&] { return "Gauss form at " + tuple_str(e); });
    }
  }
  return t.record(p, ring.modulus());
}

Record jacobi_orbit(const Context& ctx) {
  if (auto s = one_mod_5(ctx.p)) return *s;
  const auto p = ctx.p;
  ResidueRing ring(p, ctx.k);
  TeichmullerChar chars(ring);
  const std::int64_t step = (to_i(p) - 1) / 5;
  // J(T^{xt}, T^{yt}, T^{zt}) depends on x, y, z mod 5 only
  std::vector<Residue> j3;
  for (std::int64_t x = 0; x < 5; ++x) {
    for (std::int64_t y = 0; y < 5; ++y) {
      for (std::int64_t z = 0; z < 5; ++z) {
        const std::int64_t e[] = {x * step, y * step, z * step};
        j3.push_back(jacobi_sum(e, chars));
      }
    }
  }
  auto at = [&](std::int64_t x, std::int64_t y, std::int64_t z) { return j3[((x % 5) * 5 + y % 5) * 5 + z % 5]; };
  Tally t;
  for (std::int64_t a = 1; a <= 5; ++a) {
    for (std::int64_t b = 1; b <= 5; ++b) {
      for (std::int64_t c = 1; c <= 5; ++c) {
        for (std::int64_t r : {1, 2, 3, 4, 6, 7}) {
          Residue lhs = ring.zero(), rhs = ring.zero();
          for (std::int64_t k = 1; k <= 4; ++k) {
            lhs += at(a * k, b * k, c * k);
            rhs += at(a * r * k, b * r * k, c * r * k);
          }
          t.check(lhs == rhs, [&] { return "a,b,c,r = " + tuple_str({a, b, c, r}); });
        }
      }
    }
  }
  return t.record(p, ring.modulus());
}

Record jacobi_twisted_sum(const Context& ctx) {
  if (auto s = one_mod_5(ctx.p)) return *s;
  const auto p = ctx.p;
  ResidueRing ring(p, ctx.k);
  TeichmullerChar chars(ring);
  const std::int64_t n = to_i(p) - 1, step = n / 5;
  Tally t;
  for (std::int64_t a = 0; a < 5; ++a) {
    for (std::int64_t b = 0; b < 5; ++b) {
      for (std::int64_t c = 0; c < 5; ++c) {
        if ((a + c) % 5 == 0 || (b + c) % 5 == 0) continue;
        Residue sum = ring.zero();
        for (std::int64_t e = 0; e < n; ++e) {
          const std::int64_t ex[] = {-e + a * step, -e + b * step, e + c * step};
          sum += chars.value(e, -1) * jacobi_sum(ex, chars);
        }
        t.check(sum == ring(-n), [&] { return "a,b,c = " + tuple_str({a, b, c}); });
      }
    }
  }
  return t.record(p, ring.modulus());
}

Record gauss_twisted_sum(const Context& ctx) {
  if (auto s = one_mod_5(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  const ResidueRing& ring = table.ring();
  GaussSums G(table);
  const std::int64_t n = to_i(p) - 1, step = n / 5;
  Tally t;
  for (std::int64_t a = 0; a < 5; ++a) {
    for (std::int64_t b = 0; b < 5; ++b) {
      for (std::int64_t c = 0; c < 5; ++c) {
        if ((a + c) % 5 == 0 || (b + c) % 5 == 0) continue;
        Residue sum = ring.zero();
        for (std::int64_t e = 0; e < n; ++e) {
          sum += (G(-e + a * step) * G(-e + b * step) * G(e + c * step) * G(e - (a + b + c) * step)).scalar();
        }
        t.check(sum == ring(-to_i(p) * n), [&] { return "a,b,c = " + tuple_str({a, b, c}); });
      }
    }
  }
  return t.record(p, ring.modulus());
}

Record gamma_basic(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  const ResidueRing& ring = table.ring();
  TeichmullerChar chars(ring);
  Tally t;
  for (const auto& x : gamma_samples(p)) {
    const Residue g = gamma_at(x, table);
    const Residue expect = is_unit(x, p) ? -(reduce_rational(x, ring) * g) : -g;
    t.check(gamma_at(x + 1, table) == expect, [&] { return "recurrence at " + to_string(x); });

    std::uint64_t x0 = rep_p(x, p);
    if (x0 == 0) x0 = p;
    t.check(g * gamma_at(1 - x, table) == ring(x0 % 2 ? -1 : 1), [&] { return "reflection at " + to_string(x); });

    for (unsigned j = 1; j <= ctx.k; ++j) {
      const Rational y = x + Rational(to_bigint(ipow(p, j))) * frac(2, p == 7 ? 5 : 7);
      t.check(g.reduce_to(j) == gamma_at(y, table).reduce_to(j),
              [&] { return "continuity mod p^" + std::to_string(j) + " at " + to_string(x); });
    }
  }
  for (std::int64_t m = 2; m <= 5; ++m) {
    if (m % to_i(p) == 0) continue;
    Residue fixed = ring.one();
    for (std::int64_t h = 1; h < m; ++h) fixed *= gamma_at(frac(h, m), table);
    const Residue om = chars.omega(m);
    for (std::int64_t r = 0; r < to_i(p); ++r) {
      const Rational x = frac(r, to_i(p) - 1);
      Residue lhs = ring.one();
      for (std::int64_t h = 0; h < m; ++h) lhs *= gamma_at((x + h) / m, table);
      // (1 - x)(1 - p) = r + 1 - p, and omega(m)^(p-1) = 1
      const std::int64_t e = ((r + 1 - to_i(p)) % (to_i(p) - 1) + (to_i(p) - 1)) % (to_i(p) - 1);
      t.check(lhs == om.pow(static_cast<std::uint64_t>(e)) * gamma_at(x, table) * fixed,
              [&] { return "multiplication m = " + std::to_string(m) + ", r = " + std::to_string(r); });
    }
  }
  return t.record(p, ring.modulus());
}

Record rep_rules(const Context& ctx) {
  const auto p = ctx.p;
  Tally t;
  for (std::uint64_t d = 2; d < p && d <= 40; ++d) {
    const std::uint64_t a = p % d;
    for (std::uint64_t m = 1; m < d; ++m) {
      const std::uint64_t rep = rep_p(frac(to_i(m), to_i(d)), p);
      t.check(rep_p(1 - frac(to_i(m), to_i(d)), p) == p + 1 - rep,
              [&] { return "rep(1-m/d) at " + std::to_string(m) + "/" + std::to_string(d); });
      std::uint64_t tt = 1;
      while ((tt * a + m) % d != 0) ++tt;
      t.check(rep == (p * tt + m) / d, [&] { return "rep(m/d) = (pt+m)/d at " + std::to_string(m) + "/" + std::to_string(d); });
    }
    t.check(rep_p(frac(to_i(a), to_i(d)), p) == p - (p - 1) / d, [&] { return "rep(a/d), d = " + std::to_string(d); });
    t.check(rep_p(frac(to_i(d - a), to_i(d)), p) == (p - 1) / d + 1,
            [&] { return "rep((d-a)/d), d = " + std::to_string(d); });
  }
  return t.record(p, 0);
}

Residue lift3(const Residue& r, const ResidueRing& ring3) { return ring3.from_canonical(r.value()); }

Record log_derivative_rules(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 3);
  const ResidueRing r2(p, 2), r1(p, 1);
  Tally t;
  for (const auto& x : gamma_samples(p)) {
    const LogDerivs here = log_derivs(x, table), next = log_derivs(x + 1, table), refl = log_derivs(1 - x, table);
    const bool unit = is_unit(x, p);
    t.check(next.g1 - here.g1 == (unit ? reduce_rational(1 / x, r2) : r2.zero()),
            [&] { return "G1(x+1) - G1(x) at " + to_string(x); });
    auto q = [&](const LogDerivs& l) { return l.g1.reduce_to(1) * l.g1.reduce_to(1) - l.g2; };
    t.check(q(next) - q(here) == (unit ? reduce_rational(1 / (x * x), r1) : r1.zero()),
            [&] { return "second difference at " + to_string(x); });
    t.check(here.g1 == refl.g1, [&] { return "G1(x) = G1(1-x) at " + to_string(x); });
    t.check(q(here) == -q(refl), [&] { return "G1^2 - G2 reflection at " + to_string(x); });
  }
  return t.record(p, r2.modulus());
}

const Rational kShifts[] = {3, -1, Rational(5, 3), 2};

Record gamma_expansion(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 3);
  const ResidueRing& ring = table.ring();
  const ResidueRing r2(p, 2);
  Tally t;
  for (const auto& x : gamma_samples(p)) {
    LogDerivs here{r2.zero(), r2.zero()};
    bool integral = true;
    try {
      here = log_derivs(x, table);
    } catch (const Error&) {
      integral = false;
    }
    t.check(integral, [&] { return "G1, G2 not integral at " + to_string(x); });
    if (!integral) continue;
    const Residue g = gamma_at(x, table);
    for (const auto& u : kShifts) {
      const Rational z = u * Rational(to_bigint(p));
      const Residue zr = reduce_rational(z, ring);
      const Residue expect =
          g * (ring.one() + zr * lift3(here.g1, ring) + reduce_rational(z * z / 2, ring) * lift3(here.g2, ring));
      t.check(gamma_at(x + z, table) == expect, [&] { return "expansion at x = " + to_string(x) + ", z = " + to_string(z); });

      const LogDerivs there = log_derivs(x + z, table);
      const Residue g_shift = gamma_at(x + z, table).reduce_to(2);
      const Residue lhs = there.g1 * g_shift;
      const Residue rhs = here.g1 * g.reduce_to(2) + reduce_rational(z, r2) * r2.from_canonical(here.g2.value()) * g.reduce_to(2);
      t.check(lhs == rhs, [&] { return "derivative shift at x = " + to_string(x) + ", z = " + to_string(z); });
    }
  }
  return t.record(p, ring.modulus());
}

Record log_derivative_shift(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 3);
  Tally t;
  for (const auto& x : gamma_samples(p)) {
    const LogDerivs here = log_derivs(x, table);
    const Residue g = gamma_at(x, table).reduce_to(1);
    for (const auto& u : kShifts) {
      const Rational z = u * Rational(to_bigint(p));
      const LogDerivs there = log_derivs(x + z, table);
      const Residue gz = gamma_at(x + z, table).reduce_to(1);
      const std::string at = " at x = " + to_string(x) + ", z = " + to_string(z);
      t.check(there.g1.reduce_to(1) * gz == here.g1.reduce_to(1) * g, [&] { return "Gamma'" + at; });
      t.check(there.g2 * gz == here.g2 * g, [&] { return "Gamma''" + at; });
      t.check(there.g1.reduce_to(1) == here.g1.reduce_to(1), [&] { return "G1" + at; });
      t.check(there.g2 == here.g2, [&] { return "G2" + at; });
    }
  }
  return t.record(p, p);
}

Record log_derivative_correction(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 3);
  const ResidueRing r2(p, 2);
  Tally t;
  for (const auto& x : gamma_samples(p)) {
    const LogDerivs here = log_derivs(x, table);
    for (const auto& u : kShifts) {
      const Rational z = u * Rational(to_bigint(p));
      const LogDerivs there = log_derivs(x + z, table);
      const Residue square_minus = there.g1 * there.g1 - r2.from_canonical(there.g2.value());
      t.check(here.g1 == there.g1 + reduce_rational(z, r2) * square_minus,
              [&] { return "at x = " + to_string(x) + ", z = " + to_string(z); });
    }
  }
  return t.record(p, r2.modulus());
}

Record gauss_vs_direct(const Context& ctx) { return jacobi_gauss(ctx, true); }
Record gauss_general(const Context& ctx) { return jacobi_gauss(ctx, false); }

Record gamma_shift_rule(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  Tally t;
  for (std::uint64_t d = 2; d < p && d <= 12; ++d) {
    for (std::uint64_t m = 1; m < d; ++m) {
      for (std::uint64_t j = 0; j < p; ++j) {
        const GammaShift g = gamma_shift(m, d, j, table);
        t.check(g.table_value == g.closed_form, [&] {
          return "m/d = " + std::to_string(m) + "/" + std::to_string(d) + ", j = " + std::to_string(j);
        });
      }
    }
  }
  return t.record(p, table.ring().modulus());
}

Record gamma_pair_rule(const Context& ctx) {
  if (auto s = odd(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, ctx.k);
  Tally t;
  for (std::uint64_t d : {2, 3, 4, 6}) {
    if (d >= p) continue;
    for (std::uint64_t m : {std::uint64_t{1}, d - 1}) {
      for (std::uint64_t j = 0; j < p; ++j) {
        const GammaShift g = gamma_pair_product(m, d, j, table);
        t.check(g.table_value == g.closed_form, [&] {
          return "d = " + std::to_string(d) + ", m = " + std::to_string(m) + ", j = " + std::to_string(j);
        });
      }
    }
  }
  return t.record(p, table.ring().modulus());
}

struct RepPair {
  std::uint64_t m1, rep1, rep2;
};

RepPair rep_pair(std::uint64_t m, std::uint64_t d, std::uint64_t p) {
  const std::uint64_t a = rep_p(frac(to_i(m), to_i(d)), p), b = rep_p(1 - frac(to_i(m), to_i(d)), p);
  return a >= b ? RepPair{m, a, b} : RepPair{d - m, b, a};
}

// Prefix sums H^{(1)}_n and H^{(2)}_n for n < size.
struct Harmonics {
  std::vector<Rational> h1, h2;
  explicit Harmonics(std::size_t size) : h1(size), h2(size) {
    for (std::size_t n = 1; n < size; ++n) {
      const Rational inv(1, to_bigint(static_cast<std::uint64_t>(n)));
      h1[n] = h1[n - 1] + inv;
      h2[n] = h2[n - 1] + inv * inv;
    }
  }
};

bool matches(const Residue& lhs, const Rational& rhs, std::uint64_t p) {
  if (rhs == 0) return lhs.is_zero();
  if (valuation(rhs, p) < 0) return false;
  return lhs == reduce_rational(rhs, lhs.ring());
}

Rational binom(std::uint64_t n, std::uint64_t k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Record gamma_pair_harmonic(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 2);
  const ResidueRing& ring = table.ring();
  const Harmonics h(2 * p + 2);
  const Rational inv_p(1, to_bigint(p));
  Tally t;
  for (std::uint64_t d = 2; d < p && d <= 12; ++d) {
    for (std::uint64_t m = 1; m < d; ++m) {
      const Rational x = frac(to_i(m), to_i(d));
      const RepPair rp = rep_pair(m, d, p);
      const Rational gap = Rational(to_bigint(rp.rep1)) - frac(to_i(rp.m1), to_i(d));
      const Residue base = gamma_at(x, table) * gamma_at(1 - x, table);
      BigInt fact = 1;
      for (std::uint64_t j = 0; j < rp.rep1; ++j) {
        if (j > 0) fact *= to_bigint(j);
        const Residue lhs = gamma_at(x + to_bigint(j), table) * gamma_at(1 - x + to_bigint(j), table) *
                            residue_inv(base * ring.from(fact * fact));
        const bool low = j + 1 <= rp.rep2;
        const Rational delta = low ? Rational(1) : inv_p;
        const Rational shift = low ? Rational(0) : inv_p;
        Rational rhs = binom(rp.rep1 - 1 + j, j) * binom(rp.rep1 - 1, j) * delta *
                       (1 - gap * (h.h1[rp.rep1 - 1 + j] - h.h1[rp.rep2 - 1 + j] - shift));
        if (j % 2) rhs = -rhs;
        rhs.canonicalize();
        t.check(matches(lhs, rhs, p), [&] {
          return "m/d = " + std::to_string(m) + "/" + std::to_string(d) + ", j = " + std::to_string(j);
        });
      }
    }
  }
  return t.record(p, ring.modulus());
}

Record log_derivative_harmonic(const Context& ctx) {
  if (auto s = at_least_7(ctx.p)) return *s;
  const auto p = ctx.p;
  GammaTable table = build_gamma_table(p, 3);
  const ResidueRing r2(p, 2);
  const Harmonics h(2 * p + 2);
  const Rational inv_p(1, to_bigint(p));
  Tally t;
  for (std::uint64_t d = 2; d < p && d <= 12; ++d) {
    for (std::uint64_t m = 1; m < d; ++m) {
      const Rational x = frac(to_i(m), to_i(d));
      const RepPair rp = rep_pair(m, d, p);
      const Rational gap = Rational(to_bigint(rp.rep1)) - frac(to_i(rp.m1), to_i(d));
      for (std::uint64_t j = 0; j < rp.rep1; ++j) {
        const Rational sj(to_bigint(j));
        const Residue lhs = log_derivs(x + sj, table).g1 + log_derivs(1 - x + sj, table).g1 -
                            log_derivs(1 + sj, table).g1 * 2;
        const bool low = j + 1 <= rp.rep2;
        const Rational alpha = low ? Rational(0) : inv_p;
        const Rational beta = low ? Rational(0) : inv_p * inv_p;
        Rational rhs = h.h1[rp.rep1 - 1 + j] + h.h1[rp.rep1 - 1 - j] - 2 * h.h1[j] - alpha +
                       gap * (h.h2[rp.rep1 - 1 + j] - h.h2[rp.rep2 - 1 + j] - beta);
        rhs.canonicalize();
        t.check(matches(lhs, rhs, p), [&] {
          return "m/d = " + std::to_string(m) + "/" + std::to_string(d) + ", j = " + std::to_string(j);
        });
      }
    }
  }
  return t.record(p, r2.modulus());
}

}  // namespace

void add_property_cases(std::vector<CaseDef>& out) {
  out.push_back(make("prop-2.1", "sum_x T^n(x) = (p-1)[n = 0], sum_n T^n(x) = (p-1)[x = 1]", 2, 1, 3, orthogonality));
  out.push_back(make("prop-2.2", "G(chi) G(conj chi) = chi(-1) p, or 1 for chi = eps", 2, 1, 3, gauss_conjugate));
  out.push_back(make("thm-2.3", "prod_{i<m} G(chi^i psi) = G(psi^m) psi^{-m}(m) prod_{0<i<m} G(chi^i), chi of order m",
                     2, 1, 3, hasse_davenport));
  out.push_back(make("prop-2.4", "J(eps,eps) = p-2, J(eps,chi) = -1, J(chi,conj chi) = -chi(-1)", 2, 1, 3, jacobi_basic));
  out.push_back(make("prop-2.6",
                     "Jacobi reduction on the last character; J = -chi_k(-1) J(chi_1..chi_{k-1}) for a trivial "
                     "product; J(eps,...,eps) = ((p-1)^k + (-1)^(k+1))/p",
                     2, 1, 3, jacobi_reduction));
  out.push_back(make("prop-2.7", "J(chi_1..chi_k) = prod G(chi_i) / G(prod chi_i), or -prod G(chi_i)/p for a trivial product",
                     2, 1, 3, gauss_general));
  out.push_back(make("lemma-2.8", "sum_{k=1}^4 J(T^{akt},T^{bkt},T^{ckt}) is unchanged by a,b,c -> ra,rb,rc, t = (p-1)/5",
                     2, 1, 3, jacobi_orbit));
  out.push_back(make("lemma-2.9", "sum_e T^e(-1) J(T^{-e+at},T^{-e+bt},T^{e+ct}) = -(p-1) for a+c, b+c != 0 mod 5", 2, 1,
                     3, jacobi_twisted_sum));
  out.push_back(make("cor-2.10", "sum_e G_{-e+at} G_{-e+bt} G_{e+ct} G_{e-(a+b+c)t} = -p(p-1) for a+c, b+c != 0 mod 5",
                     2, 1, 3, gauss_twisted_sum));
  out.push_back(make("prop-2.12",
                     "Gamma_p(x+1) = -x Gamma_p(x) or -Gamma_p(x); Gamma_p(x) Gamma_p(1-x) = (-1)^{x0}; continuity; "
                     "multiplication formula",
                     2, 1, 3, gamma_basic));
  out.push_back(make("prop-2.13", "rep(1-m/d) = p+1-rep(m/d); rep(m/d) = (pt+m)/d; rep(a/d) = p - floor((p-1)/d)", 2, 1,
                     3, rep_rules));
  out.push_back(make("prop-2.14", "G1(x+1)-G1(x) = 1/x; second difference 1/x^2; G1(x) = G1(1-x); G1^2-G2 reflection",
                     2, 2, 2, log_derivative_rules));
  out.push_back(make("prop-2.15",
                     "G1, G2 in Z_p; Gamma_p(x+z) = Gamma_p(x)(1 + z G1 + z^2/2 G2) mod p^3; Gamma_p'(x+z) = "
                     "Gamma_p'(x) + z Gamma_p''(x) mod p^2",
                     3, 3, 3, gamma_expansion));
  out.push_back(make("cor-2.16", "Gamma_p', Gamma_p'', G1, G2 at x+z agree with x mod p for z in pZ_p", 1, 1, 1,
                     log_derivative_shift));
  out.push_back(make("cor-2.17", "G1(x) = G1(x+z) + z(G1(x+z)^2 - G2(x+z)) mod p^2", 2, 2, 2, log_derivative_correction));
  out.push_back(make("thm-2.18", "G(conj omega^j) = -pi^j Gamma_p(j/(p-1)) reproduces every direct Jacobi sum J(T^a,T^b)",
                     2, 1, 3, gauss_vs_direct));
  out.push_back(make("prop-2.19", "Gamma_p(m/d+j) = (-1)^j Gamma_p(m/d) (m/d)_j with the p-factor removed past p-rep(m/d)",
                     2, 1, 3, gamma_shift_rule));
  out.push_back(make("lemma-2.20",
                     "Gamma_p(1/d+j) Gamma_p(1-1/d+j) = Gamma_p(1/d) Gamma_p(1-1/d) (1/d)_j (1-1/d)_j times 1, d/p, "
                     "d^2/((d-1)p^2)",
                     2, 1, 3, gamma_pair_rule));
  out.push_back(make("lemma-2.21",
                     "Gamma_p(m/d+j) Gamma_p(1-m/d+j)/(Gamma_p(m/d) Gamma_p(1-m/d) j!^2) = (-1)^j C(r1-1+j,j) "
                     "C(r1-1,j) delta [1 - (r1 - m1/d)(H_{r1-1+j} - H_{r2-1+j} - delta')] mod p^2",
                     2, 2, 2, gamma_pair_harmonic));
  out.push_back(make("lemma-2.22",
                     "G1(m/d+j) + G1(1-m/d+j) - 2G1(1+j) = H_{r1-1+j} + H_{r1-1-j} - 2H_j - alpha + (r1 - m1/d)"
                     "(H2_{r1-1+j} - H2_{r2-1+j} - beta) mod p^2",
                     2, 2, 2, log_derivative_harmonic));
}

}  // namespace scv::detail
