#include <cstdlib>

#include "cases.hpp"
#include "scv/characters.hpp"
#include "scv/error.hpp"
#include "scv/hypergeometric.hpp"
#include "scv/primes.hpp"
#include "scv/variety.hpp"

namespace scv::detail {

namespace {

using Fractions = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

std::int64_t to_i(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<Rational> rationals(const Fractions& f) {
  std::vector<Rational> out;
  for (auto [m, d] : f) out.push_back(frac(to_i(m), to_i(d)));
  return out;
}

std::string fraction_list(const Fractions& f) {
  std::string s;
  for (auto [m, d] : f) {
    if (!s.empty()) s += ',';
    s += std::to_string(m) + '/' + std::to_string(d);
  }
  return s;
}

std::string ones(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += i ? ",1" : "1";
  return s;
}

// _{n+1}F_n[a; 1, ..., 1 | 1] truncated at p - 1
Residue truncated(const std::vector<Rational>& upper, std::uint64_t p, const ResidueRing& ring) {
  HypParams h{upper, std::vector<Rational>(upper.size() - 1, Rational(1)), 1, p - 1};
  return trunc_hyp(h, ring);
}

std::string series_name(const Fractions& f) {
  return std::to_string(f.size()) + "F" + std::to_string(f.size() - 1) + "[" + fraction_list(f) + ";" +
         ones(f.size() - 1) + "|1]_{p-1}";
}

// Hypotheses 1 < d_i < p shared by the G-function congruences.
std::optional<Record> below_p(std::uint64_t p, std::initializer_list<std::uint64_t> ds) {
  for (auto d : ds) {
    if (d % p == 0) return skip(p, "p divides d");
  }
  for (auto d : ds) {
    if (p <= d) return skip(p, "needs p > " + std::to_string(d));
  }
  return std::nullopt;
}

std::optional<Record> one_mod(std::uint64_t p, std::initializer_list<std::uint64_t> ds) {
  for (auto d : ds) {
    if (d % p == 0) return skip(p, "p divides d");
  }
  if (p == 2) return skip(p, "needs an odd prime");
  for (auto d : ds) {
    if ((p - 1) % d != 0) return skip(p, "needs p = 1 mod " + std::to_string(d));
  }
  return std::nullopt;
}

int minus_one_power(std::uint64_t e) { return e % 2 ? -1 : 1; }

CaseDef make(std::string name, std::string statement, unsigned k, std::uint64_t lo, std::uint64_t hi, CheckFn fn,
             unsigned needs = kNeedNone) {
  CaseDef c;
  c.info = CaseInfo{std::move(name), std::move(statement), false, k, lo, hi};
  c.min_k = 1;
  c.max_k = k;
  c.needs = needs;
  c.check = std::move(fn);
  return c;
}

const Fractions kQuintic = {{1, 5}, {2, 5}, {3, 5}, {4, 5}};

void add_quintic_cases(std::vector<CaseDef>& out) {
  out.push_back(make("rv-d5", series_name(kQuintic) + " = c(p) mod p^3", 3, 7, 97, [](const Context& ctx) {
    const auto p = ctx.p;
    if (p == 5) return skip(p, "p divides d");
    ResidueRing ring(p, ctx.k);
    return compare(p, truncated(rationals(kQuintic), p, ring), ring.from((*ctx.data.c_form)[p]));
  }, kNeedCForm));

  CaseDef cor52 = make(
      "cor-5.2", "lift(4G(1/5,2/5,3/5,4/5)_p - s(p) p mod p^3) = c(p), s(p) = prod Gamma_p(m/5)", 3, 7, 97,
      [](const Context& ctx) {
        const auto p = ctx.p;
        if (p == 5) return skip(p, "p divides d");
        if (p == 2) return skip(p, "needs an odd prime");
        if (auto g = gamma_cap_guard(ctx, 3)) return *g;
        GammaTable table = build_gamma_table(p, 3);
        const auto args = rationals(kQuintic);
        const Residue s = gamma_product(args, table);
        const BigInt lhs = balanced_lift(g_function(args, table) - s * to_i(p));
        const BigInt c = (*ctx.data.c_form)[p];
        Record r = compare_exact(p, lhs, c);
        const BigInt cube = to_bigint(p) * p * p;
        if (2 * abs(c) >= cube) {
          r.status = Status::Fail;
          r.reason = "|c(p)| >= p^3/2, the balanced lift is not determined";
        }
        return r;
      },
      kNeedCForm);
  cor52.min_k = 3;
  out.push_back(std::move(cor52));

  CaseDef thm51 = make(
      "thm-5.1", "-1/(p-1) [1 + 1/p sum_{j=1}^{p-2} G_{-j}^5 G_{5j} T^{-5j}(-5)] - s(p) p = c(p)", 3, 7, 97,
      [](const Context& ctx) {
        const auto p = ctx.p;
        if (p == 5) return skip(p, "p divides d");
        if (p < 7) return skip(p, "needs p >= 7");
        if (auto g = gamma_cap_guard(ctx, 3)) return *g;
        GammaTable table = build_gamma_table(p, 3);
        return compare_exact(p, theorem51_check(table), (*ctx.data.c_form)[p]);
      },
      kNeedCForm);
  thm51.min_k = 3;
  out.push_back(std::move(thm51));

  CaseDef cor53 = make(
      "cor-5.3", "-p^3 4F3(chi5,chi5^2,chi5^3,chi5^4; eps,eps,eps | 1)_p - s(p) p = c(p) for p = 1 mod 5", 3, 7, 97,
      [](const Context& ctx) {
        const auto p = ctx.p;
        if (auto s = one_mod(p, {5})) return *s;
        ResidueRing ring(p, 3);
        TeichmullerChar chars(ring);
        const Residue scaled = gaussian_hgs(kQuintic, chars).times_p_power(3).to_residue(3);
        const BigInt lhs = balanced_lift(-scaled - ring(quintic_sign(p) * to_i(p)));
        return compare_exact(p, lhs, (*ctx.data.c_form)[p]);
      },
      kNeedCForm);
  cor53.min_k = 3;
  out.push_back(std::move(cor53));

  out.push_back(make(
      "pointcount",
      "c(p) from N_p (p^3+25p^2-100p+1, p^3+p^2+1, p^3+p^2+2p+1 - N_p) = c(p); p N_p = p^4+p^3+p^2+p-4+10A+10B+5C+D",
      3, 2, 31, [](const Context& ctx) {
        const auto p = ctx.p;
        if (p == 5) return skip(p, "p divides d");
        if (p > ctx.options.enum_cap) {
          return skip(p, "p exceeds the enumeration cap " + std::to_string(ctx.options.enum_cap));
        }
        if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
        const CountResult count = count_quintic(p, ctx.options.enum_cap);
        Record r = compare_exact(p, c_from_points(p, count.points), (*ctx.data.c_form)[p]);
        CharSums sums = p == 2 ? char_sum_abcd(2, nullptr) : [&] {
          GammaTable table = build_gamma_table(p, ctx.k);
          return char_sum_abcd(p, &table);
        }();
        const Residue from_sums = point_count_from_sums(sums);
        if (!(from_sums == from_sums.ring().from(count.points * p))) {
          r.status = Status::Fail;
          r.reason = "10A+10B+5C+D gives p N_p = " + residue_str(from_sums) + " mod " +
                     std::to_string(from_sums.ring().modulus());
        }
        return r;
      }, kNeedCForm));
}

const std::uint64_t kSmallDs[] = {2, 3, 4, 6};

void add_g_function_cases(std::vector<CaseDef>& out) {
  for (auto d : kSmallDs) {
    const Fractions two = {{1, d}, {d - 1, d}};
    out.push_back(make("thm-4.3-d" + std::to_string(d),
                       "2G(1/d,1-1/d)_p = " + series_name(two) + " mod p^2, d = " + std::to_string(d), 2, 3, 499,
                       [two, d](const Context& ctx) {
                         if (auto s = below_p(ctx.p, {d})) return *s;
                         if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
                         GammaTable table = build_gamma_table(ctx.p, ctx.k);
                         const auto args = rationals(two);
                         return compare(ctx.p, g_function(args, table), truncated(args, ctx.p, table.ring()));
                       }));
  }
  for (auto d : kSmallDs) {
    const Fractions three = {{1, 2}, {1, d}, {d - 1, d}};
    out.push_back(make("thm-4.4-d" + std::to_string(d),
                       "3G(1/2,1/d,1-1/d)_p = " + series_name(three) + " mod p^2, d = " + std::to_string(d), 2, 3,
                       499, [three, d](const Context& ctx) {
                         if (auto s = below_p(ctx.p, {2, d})) return *s;
                         if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
                         GammaTable table = build_gamma_table(ctx.p, ctx.k);
                         const auto args = rationals(three);
                         return compare(ctx.p, g_function(args, table), truncated(args, ctx.p, table.ring()));
                       }));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const std::uint64_t d1 = kSmallDs[i], d2 = kSmallDs[j];
      const Fractions four = {{1, d1}, {d1 - 1, d1}, {1, d2}, {d2 - 1, d2}};
      out.push_back(make(
          "thm-4.5-d" + std::to_string(d1) + "-d" + std::to_string(d2),
          "4G(1/d1,1-1/d1,1/d2,1-1/d2)_p = " + series_name(four) +
              " + s(p) p mod p^3, s(p) = prod Gamma_p = (-1)^(floor((p-1)/d1)+floor((p-1)/d2))",
          3, 7, 97, [four, d1, d2](const Context& ctx) {
            const auto p = ctx.p;
            if (auto s = below_p(p, {d1, d2})) return *s;
            if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
            GammaTable table = build_gamma_table(p, ctx.k);
            const ResidueRing& ring = table.ring();
            const auto args = rationals(four);
            const Residue s = gamma_product(args, table);
            Record r = compare(p, g_function(args, table), truncated(args, p, ring) + s * to_i(p));
            const int sign = minus_one_power((p - 1) / d1 + (p - 1) / d2);
            if (!(s == ring(sign))) {
              r.status = Status::Fail;
              r.reason = "Gamma_p product " + residue_str(s) + " differs from (-1)^(...) = " + std::to_string(sign);
            }
            return r;
          }));
    }
  }
  const std::pair<std::uint64_t, std::uint64_t> quartic[] = {{5, 2}, {8, 3}, {10, 3}, {12, 5}};
  for (auto [d, rr] : quartic) {
    const std::uint64_t r = rr;
    const Fractions four = {{1, d}, {r, d}, {d - r, d}, {d - 1, d}};
    out.push_back(make("thm-4.6-d" + std::to_string(d) + "-r" + std::to_string(r),
                       "4G(1/d,r/d,1-r/d,1-1/d)_p = " + series_name(four) + " + s(p) p mod p^3, s(p) = prod Gamma_p",
                       3, 7, 97, [four, d](const Context& ctx) {
                         const auto p = ctx.p;
                         if (auto s = below_p(p, {d})) return *s;
                         if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
                         GammaTable table = build_gamma_table(p, ctx.k);
                         const auto args = rationals(four);
                         const Residue s = gamma_product(args, table);
                         return compare(p, g_function(args, table),
                                        truncated(args, p, table.ring()) + s * to_i(p));
                       }));
  }
}

void add_gaussian_cases(std::vector<CaseDef>& out) {
  for (auto d : kSmallDs) {
    const Fractions two = {{1, d}, {d - 1, d}};
    out.push_back(make("cor-4.7-d" + std::to_string(d),
                       "-p 2F1(rho,conj rho; eps | 1)_p = " + series_name(two) + " mod p^2, p = 1 mod d", 2, 3, 199,
                       [two, d](const Context& ctx) {
                         if (auto s = one_mod(ctx.p, {d})) return *s;
                         ResidueRing ring(ctx.p, ctx.k);
                         TeichmullerChar chars(ring);
                         const Residue lhs = -gaussian_hgs(two, chars).times_p_power(1).to_residue(ctx.k);
                         return compare(ctx.p, lhs, truncated(rationals(two), ctx.p, ring));
                       }));
  }
  for (auto d : kSmallDs) {
    const Fractions three = {{1, 2}, {1, d}, {d - 1, d}};
    out.push_back(make("cor-4.8-d" + std::to_string(d),
                       "p^2 3F2(psi,rho,conj rho; eps,eps | 1)_p = " + series_name(three) + " mod p^2, p = 1 mod d",
                       2, 3, 199, [three, d](const Context& ctx) {
                         if (auto s = one_mod(ctx.p, {2, d})) return *s;
                         ResidueRing ring(ctx.p, ctx.k);
                         TeichmullerChar chars(ring);
                         const Residue lhs = gaussian_hgs(three, chars).times_p_power(2).to_residue(ctx.k);
                         return compare(ctx.p, lhs, truncated(rationals(three), ctx.p, ring));
                       }));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const std::uint64_t d1 = kSmallDs[i], d2 = kSmallDs[j];
      const Fractions four = {{1, d1}, {d1 - 1, d1}, {1, d2}, {d2 - 1, d2}};
      out.push_back(make("cor-4.9-d" + std::to_string(d1) + "-d" + std::to_string(d2),
                         "-p^3 4F3(rho1,conj rho1,rho2,conj rho2; eps,eps,eps | 1)_p = " + series_name(four) +
                             " + s(p) p mod p^3, p = 1 mod d1, d2",
                         3, 7, 97, [four, d1, d2](const Context& ctx) {
                           const auto p = ctx.p;
                           if (auto s = one_mod(p, {d1, d2})) return *s;
                           ResidueRing ring(p, ctx.k);
                           TeichmullerChar chars(ring);
                           const Residue lhs = -gaussian_hgs(four, chars).times_p_power(3).to_residue(ctx.k);
                           const int sign = minus_one_power((p - 1) / d1 + (p - 1) / d2);
                           return compare(p, lhs, truncated(rationals(four), p, ring) + ring(sign * to_i(p)));
                         }));
    }
  }
  const std::pair<std::uint64_t, std::uint64_t> quartic[] = {{5, 2}, {8, 3}, {10, 3}, {12, 5}};
  for (auto [d, rr] : quartic) {
    const std::uint64_t r = rr;
    const Fractions four = {{1, d}, {r, d}, {d - r, d}, {d - 1, d}};
    out.push_back(make("cor-4.10-d" + std::to_string(d) + "-r" + std::to_string(r),
                       "-p^3 4F3(rho,conj rho,rho^r,conj rho^r; eps,eps,eps | 1)_p = " + series_name(four) +
                           " + s(p) p mod p^3, p = 1 mod d",
                       3, 7, 97, [four, d](const Context& ctx) {
                         const auto p = ctx.p;
                         if (auto s = one_mod(p, {d})) return *s;
                         if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
                         GammaTable table = build_gamma_table(p, ctx.k);
                         TeichmullerChar chars(table.ring());
                         const auto args = rationals(four);
                         const Residue lhs = -gaussian_hgs(four, chars).times_p_power(3).to_residue(ctx.k);
                         return compare(p, lhs, truncated(args, p, table.ring()) + gamma_product(args, table) * to_i(p));
                       }));
  }
  for (std::uint64_t d : {3, 4, 5}) {
    Fractions all;
    for (std::uint64_t m = 1; m < d; ++m) all.push_back({m, d});
    CaseDef c = make("prop-4.2-d" + std::to_string(d),
                     std::to_string(d - 1) + "G(" + fraction_list(all) + ")_p = (-1)^n p^n " + std::to_string(d - 1) +
                         "F" + std::to_string(d - 2) + "(rho^1,...,rho^(d-1); eps,... | 1)_p for p = 1 mod d",
                     2, 3, 61, [all, d](const Context& ctx) {
                       const auto p = ctx.p;
                       if (auto s = one_mod(p, {d})) return *s;
                       if (auto g = gamma_cap_guard(ctx, ctx.k)) return *g;
                       GammaTable table = build_gamma_table(p, ctx.k);
                       TeichmullerChar chars(table.ring());
                       const int n = static_cast<int>(all.size()) - 1;
                       Residue rhs = gaussian_hgs(all, chars).times_p_power(n).to_residue(ctx.k);
                       if (n % 2) rhs = -rhs;
                       return compare(p, g_function(rationals(all), table), rhs);
                     });
    out.push_back(std::move(c));
  }
}

void add_known_cases(std::vector<CaseDef>& out) {
  for (auto d : kSmallDs) {
    CaseDef c = make("d1-twist-d" + std::to_string(d),
                     "2F1[1/d,1-1/d;1|1]_{p-1} = (-t/p) mod p^2 with t calibrated, d = " + std::to_string(d), 2, 3,
                     499, [d](const Context& ctx) {
                       const auto p = ctx.p;
                       if (p == 2) return skip(p, "needs an odd prime");
                       if (d % p == 0) return skip(p, "p divides d");
                       ResidueRing ring(p, ctx.k);
                       const auto args = std::vector<Rational>{frac(1, to_i(d)), frac(to_i(d) - 1, to_i(d))};
                       return compare(p, truncated(args, p, ring), ring(legendre(-ctx.data.twist, p)));
                     }, kNeedTwist);
    c.twist_d = d;
    out.push_back(std::move(c));
  }

  out.push_back(make("apery-ans", "A((p-1)/2) = gamma(p) mod p^2, eta^4(2z) eta^4(4z) = sum gamma(n) q^n", 2, 3, 199,
                     [](const Context& ctx) {
                       const auto p = ctx.p;
                       if (p == 2) return skip(p, "needs an odd prime");
                       ResidueRing ring(p, ctx.k);
                       return compare(p, ring.from(apery((p - 1) / 2, AperyKind::A)),
                                      ring.from((*ctx.data.gamma_form)[p]));
                     }, kNeedGammaForm));

  out.push_back(make("beukers-stienstra",
                     "3F2[1/2,1/2,1/2;1,1|1]_{p-1} = a(p) mod p^2, also B((p-1)/2) = a(p) for p >= 5, eta^6(4z) = sum a(n) q^n", 2, 3, 499,
                     [](const Context& ctx) {
                       const auto p = ctx.p;
                       if (p == 2) return skip(p, "needs an odd prime");
                       ResidueRing ring(p, ctx.k);
                       const Residue a = ring.from((*ctx.data.a_form)[p]);
                       Record r = compare(p, truncated({frac(1, 2), frac(1, 2), frac(1, 2)}, p, ring), a);
                       const Residue b = ring.from(apery((p - 1) / 2, AperyKind::B));
                       if (p >= 5 && !(b == a)) {
                         r.status = Status::Fail;
                         r.reason = "B((p-1)/2) = " + residue_str(b) + " differs from a(p)";
                       }
                       return r;
                     }, kNeedAForm));

  out.push_back(make("kilbourn", "4F3[1/2,1/2,1/2,1/2;1,1,1|1]_{p-1} = gamma(p) mod p^3", 3, 7, 97,
                     [](const Context& ctx) {
                       const auto p = ctx.p;
                       if (p == 2) return skip(p, "needs an odd prime");
                       ResidueRing ring(p, ctx.k);
                       const Rational h = frac(1, 2);
                       return compare(p, truncated({h, h, h, h}, p, ring), ring.from((*ctx.data.gamma_form)[p]));
                     }, kNeedGammaForm));

  CaseDef ab = make("apery-beukers", "A(m p^r - 1) = A(m p^(r-1) - 1) and B likewise mod p^(3r), m, r in {1,2}", 3, 5,
                    13, [](const Context& ctx) {
                      const auto p = ctx.p;
                      if (p < 5) return skip(p, "needs p >= 5");
                      Tally tally;
                      for (AperyKind kind : {AperyKind::A, AperyKind::B}) {
                        for (std::uint64_t m : {1, 2}) {
                          for (unsigned r : {1u, 2u}) {
                            const BigInt mod = to_bigint(ipow(p, 3 * r));
                            const BigInt diff = apery(m * ipow(p, r) - 1, kind) - apery(m * ipow(p, r - 1) - 1, kind);
                            tally.check(diff % mod == 0, [&] {
                              return std::string(kind == AperyKind::A ? "A" : "B") + " fails at m = " +
                                     std::to_string(m) + ", r = " + std::to_string(r);
                            });
                          }
                        }
                      }
                      return tally.record(p, 0);
                    });
  ab.min_k = 1;
  ab.max_k = 3;
  out.push_back(std::move(ab));
}

}  // namespace

void add_main_cases(std::vector<CaseDef>& out) {
  add_quintic_cases(out);
  add_g_function_cases(out);
  add_gaussian_cases(out);
  add_known_cases(out);
}

}  // namespace scv::detail
