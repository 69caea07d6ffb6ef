#include <array>

#include "cases.hpp"
#include "scv/identities.hpp"

namespace scv::detail {

namespace {

struct Tuple {
  std::uint64_t P, m, n;
  Rational c1, c2;
};

// The i-th (1-based) parameter tuple with P > m >= n >= P/2, P <= 12.
Tuple identity_tuple(std::uint64_t i) {
  static const std::vector<std::array<std::uint64_t, 3>> triples = [] {
    std::vector<std::array<std::uint64_t, 3>> v;
    for (std::uint64_t P = 2; P <= 12; ++P) {
      for (std::uint64_t n = (P + 1) / 2; n < P; ++n) {
        for (std::uint64_t m = n; m < P; ++m) v.push_back({P, m, n});
      }
    }
    return v;
  }();
  const auto& t = triples[(7 * (i - 1)) % triples.size()];
  const auto s = static_cast<std::int64_t>(i);
  return {t[0], t[1], t[2], frac(s % 5 - 2, 1 + s % 3), frac(3 - s % 7, 1 + s % 4)};
}

bool is_int_in(const Rational& x, std::int64_t lo, std::int64_t hi) {
  if (x.get_den() != 1) return false;
  return x >= lo && x <= hi;
}

std::string mn(std::uint64_t m, std::uint64_t n) { return "m = " + std::to_string(m) + ", n = " + std::to_string(n); }

std::string tuple_str(const Tuple& t) {
  return "P = " + std::to_string(t.P) + ", " + mn(t.m, t.n) + ", C1 = " + to_string(t.c1) + ", C2 = " + to_string(t.c2);
}

CaseDef make(std::string name, std::string statement, std::uint64_t lo, std::uint64_t hi, CheckFn fn) {
  CaseDef c;
  c.info = CaseInfo{std::move(name), std::move(statement), true, 0, lo, hi};
  c.min_k = 0;
  c.max_k = 0;
  c.check = std::move(fn);
  return c;
}

std::optional<Record> positive(std::uint64_t i) {
  if (i == 0) return skip(i, "indices start at 1");
  return std::nullopt;
}

}  // namespace

void add_identity_cases(std::vector<CaseDef>& out) {
  out.push_back(make("identity-3.1",
                     "x (1-x)_n (1-x)_m / ((x)_{n+1} (x)_{m+1}) equals its binomial-harmonic partial fraction "
                     "expansion; index = m, all 1 <= n <= m",
                     1, 10, [](const Context& ctx) {
                       if (auto s = positive(ctx.p)) return *s;
                       const std::uint64_t m = ctx.p;
                       Tally t;
                       for (std::uint64_t n = 1; n <= m; ++n) {
                         const auto lo = -static_cast<std::int64_t>(m);
                         const auto samples = sample_points(2 * identity_degree(m, n) + 2,
                                                            [&](const Rational& x) { return !is_int_in(x, lo, 0); });
                         for (const auto& c : identity_theorem1(m, n, samples)) {
                           t.check(c.holds(), [&] { return mn(m, n) + ": " + to_string(c.lhs) + " != " + to_string(c.rhs); });
                         }
                       }
                       return t.record(m, 0);
                     }));

  out.push_back(make("identity-3.2",
                     "(-1)^(m+n) = sum_{k<=n} F(k) (1 + k(H_{m+k} + H_{m-k} + H_{n+k} + H_{n-k} - 4H_k)) + tail; "
                     "index = m, all 1 <= n <= m",
                     1, 25, [](const Context& ctx) {
                       if (auto s = positive(ctx.p)) return *s;
                       const std::uint64_t m = ctx.p;
                       Tally t;
                       for (std::uint64_t n = 1; n <= m; ++n) {
                         const IdentityCheck c = identity_corollary1(m, n);
                         t.check(c.holds(), [&] { return mn(m, n) + ": " + to_string(c.lhs) + " != " + to_string(c.rhs); });
                       }
                       return t.record(m, 0);
                     }));

  out.push_back(make("identity-3.3",
                     "the expansion weighted by C1 sum_{s=P-n}^{n} 1/(s-x) + C2 sum_{s=P-m}^{m} 1/(s-x); index selects "
                     "(P, m, n, C1, C2)",
                     1, 30, [](const Context& ctx) {
                       if (auto s = positive(ctx.p)) return *s;
                       const Tuple tp = identity_tuple(ctx.p);
                       const auto lo = -static_cast<std::int64_t>(tp.m);
                       const auto band_lo = static_cast<std::int64_t>(tp.P - tp.m);
                       const auto band_hi = static_cast<std::int64_t>(tp.m);
                       const auto samples =
                           sample_points(2 * identity_degree(tp.m, tp.n, tp.P) + 2, [&](const Rational& x) {
                             return !is_int_in(x, lo, 0) && !is_int_in(x, band_lo, band_hi);
                           });
                       Tally t;
                       for (const auto& c : identity_theorem2(tp.P, tp.m, tp.n, tp.c1, tp.c2, samples)) {
                         t.check(c.holds(), [&] { return tuple_str(tp) + ": " + to_string(c.lhs) + " != " + to_string(c.rhs); });
                       }
                       return t.record(ctx.p, 0);
                     }));

  out.push_back(make("identity-3.4",
                     "0 = sum_{k<=n} F(k)(bracket(k) w1(k) - k w2(k)) + sum tail(k) w1(k); index selects "
                     "(P, m, n, C1, C2)",
                     1, 30, [](const Context& ctx) {
                       if (auto s = positive(ctx.p)) return *s;
                       const Tuple tp = identity_tuple(ctx.p);
                       const IdentityCheck c = identity_corollary2(tp.P, tp.m, tp.n, tp.c1, tp.c2);
                       Tally t;
                       t.check(c.holds(), [&] { return tuple_str(tp) + ": residual " + to_string(c.rhs); });
                       return t.record(ctx.p, 0);
                     }));
}

}  // namespace scv::detail
