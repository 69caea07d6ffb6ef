#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "scv/error.hpp"
#include "scv/hypergeometric.hpp"
#include "scv/primes.hpp"
#include "scv/qseries.hpp"
#include "support.hpp"

namespace scv {
namespace {

using test::q;

// Sum the series term by term in exact rationals.
Rational exact_hyp(const HypParams& h) {
  Rational total = 0, term = 1;
  for (std::uint64_t n = 0; n <= h.m; ++n) {
    if (n > 0) {
      for (const auto& a : h.upper) term *= a + (n - 1);
      for (const auto& b : h.lower) term /= b + (n - 1);
      term *= h.z;
      term /= n;
    }
    total += term;
  }
  return total;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

TEST(TruncHyp, SpecExamples) {
  const ResidueRing r9(3, 2);
  EXPECT_EQ(trunc_hyp({{q(1, 2), q(1, 3)}, {q(1)}, q(1), 0}, r9), r9.one());
  const Residue v = trunc_hyp({{q(1, 2), q(1, 2)}, {q(1)}, q(1), 2}, r9);
  EXPECT_EQ(v.value(), 8u);
  EXPECT_EQ(v, r9(legendre(-1, 3)));
}

TEST(TruncHyp, QuinticSeriesAtSevenIsC7) {
  const ResidueRing r(7, 3);
  const HypParams h{{q(1, 5), q(2, 5), q(3, 5), q(4, 5)}, {q(1), q(1), q(1)}, q(1), 6};
  EXPECT_EQ(trunc_hyp(h, r), r.from(newform_coeff(ModularForm::C, 7, 100)));
}

TEST(TruncHyp, MatchesExactSummation) {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
  std::size_t compared = 0;
  for (std::uint64_t p : {5, 7, 11, 53}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const ResidueRing ring(p, k);
      for (int trial = 0; trial < 25; ++trial) {
        auto unit_rational = [&] {
          long d;
          do d = den(rng); while (d % static_cast<long>(p) == 0);
          return q(num(rng), d);
        };
        HypParams h;
        const int n_up = 1 + trial % 3;
        for (int i = 0; i < n_up; ++i) h.upper.push_back(unit_rational());
        for (int i = 0; i + 1 < n_up; ++i) {
          Rational b;
          do b = unit_rational(); while (b <= 0 && b.get_den() == 1);
          h.lower.push_back(b);
        }
        h.z = unit_rational();
        h.m = static_cast<std::uint64_t>(trial * 2 % 51);
        const Rational exact = exact_hyp(h);
        if (exact != 0 && valuation(exact, p) < 0) {
          EXPECT_THROW(trunc_hyp(h, ring), Error);
          continue;
        }
        ++compared;
        EXPECT_EQ(trunc_hyp(h, ring), reduce_rational(exact, ring)) << p << ' ' << k << ' ' << trial;
      }
    }
  }
  EXPECT_GT(compared, 150u);
}

// Terms with p in the denominator that cancel inside the sum.
TEST(TruncHyp, CancellingPolesAcrossTerms) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const ResidueRing ring(p, 3);
    const HypParams h{{q(1, 2), q(1, 2), q(1, 2), q(1, 2)}, {q(1), q(1), q(1)}, q(1), p - 1};
    EXPECT_EQ(trunc_hyp(h, ring), reduce_rational(exact_hyp(h), ring));
  }
}

TEST(Apery, SpecExamples) {
  EXPECT_EQ(apery(0, AperyKind::A), 1);
  EXPECT_EQ(apery(1, AperyKind::A), 5);
  EXPECT_EQ(apery(1, AperyKind::B), 3);
  EXPECT_EQ(apery(0, AperyKind::B), 1);
}

// The three-term recurrences that define the Apery sequences independently of the binomial sums.
TEST(Apery, SatisfiesTheRecurrences) {
  std::vector<BigInt> a{1, 5}, b{1, 3};
  for (long n = 2; n <= 60; ++n) {
    const BigInt nn = n, m = n - 1;
    a.push_back(((34 * nn * nn * nn - 51 * nn * nn + 27 * nn - 5) * a[n - 1] - m * m * m * a[n - 2]) / (nn * nn * nn));
    b.push_back(((11 * nn * nn - 11 * nn + 3) * b[n - 1] + m * m * b[n - 2]) / (nn * nn));
  }
  for (std::uint64_t n = 0; n <= 60; ++n) {
    EXPECT_EQ(apery(n, AperyKind::A), a[n]) << n;
    EXPECT_EQ(apery(n, AperyKind::B), b[n]) << n;
  }
  BigInt direct = 0;
  for (unsigned long j = 0; j <= 7; ++j) direct += binom(7 + j, j) * binom(7, j) * binom(7, j);
  EXPECT_EQ(apery(7, AperyKind::B), direct);
}

TEST(GFunction, TwoTermMatchesTruncatedSeriesModP2) {
  for (std::uint64_t p : primes_in(7, 97)) {
    const GammaTable t = build_gamma_table(p, 2);
    for (long d : {2, 3, 4, 6}) {
      const std::vector<Rational> args{q(1, d), q(d - 1, d)};
      const HypParams h{args, {q(1)}, q(1), p - 1};
      EXPECT_EQ(g_function(args, t), trunc_hyp(h, t.ring())) << p << ' ' << d;
    }
  }
}

TEST(GFunction, ArgumentOrderDoesNotMatter) {
  const GammaTable t = build_gamma_table(13, 2);
  const std::vector<Rational> a{q(1, 4), q(1, 2), q(3, 4)}, b{q(3, 4), q(1, 4), q(1, 2)};
  EXPECT_EQ(g_function(a, t), g_function(b, t));
}

TEST(GFunction, QuinticLiftIsC7) {
  const GammaTable t = build_gamma_table(7, 3);
  const std::vector<Rational> args{q(1, 5), q(2, 5), q(3, 5), q(4, 5)};
  const Residue s = gamma_product(args, t);
  EXPECT_EQ(s, t.ring()(-1));
  EXPECT_EQ(balanced_lift(g_function(args, t) - s * 7), newform_coeff(ModularForm::C, 7, 100));
}

TEST(GFunction, SignFromGammaProductMatchesFloorFormula) {
  for (std::uint64_t p : primes_in(7, 61)) {
    const GammaTable t = build_gamma_table(p, 2);
    for (long d1 : {2, 3, 4, 6}) {
      for (long d2 : {2, 3, 4, 6}) {
        const std::vector<Rational> args{q(1, d1), q(d1 - 1, d1), q(1, d2), q(d2 - 1, d2)};
        const auto e = (p - 1) / static_cast<std::uint64_t>(d1) + (p - 1) / static_cast<std::uint64_t>(d2);
        EXPECT_EQ(gamma_product(args, t), t.ring()(e % 2 ? -1 : 1));
      }
    }
  }
}

TEST(GFunction, RejectsDenominatorsDivisibleByP) {
  const GammaTable t = build_gamma_table(5, 2);
  const std::vector<Rational> args{q(1, 5), q(4, 5)};
  EXPECT_THROW(g_function(args, t), Error);
}

TEST(GreeneBinomial, SpecExamples) {
  const TeichmullerChar chars(ResidueRing(11, 2));
  const ScaledResidue ee = greene_binomial(0, 0, chars);
  EXPECT_EQ(ee.scale(), 1);
  EXPECT_EQ(ee.mantissa(), chars.ring()(9));
  const ScaledResidue cc = greene_binomial(1, 1, chars);
  EXPECT_EQ(cc.scale(), 1);
  EXPECT_EQ(cc.mantissa(), chars.ring()(-1));
  const ScaledResidue ce = greene_binomial(1, 0, chars);
  EXPECT_EQ(ce.mantissa(), chars.ring()(-1));
}

TEST(GreeneBinomial, MatchesDirectJacobi) {
  const TeichmullerChar chars(ResidueRing(13, 2));
  for (std::int64_t a = 0; a < 12; ++a) {
    for (std::int64_t b = 0; b < 12; ++b) {
      Residue j = chars.ring().zero();
      for (std::int64_t t = 0; t < 13; ++t) j += chars.value(a, t) * chars.value(-b, (14 - t) % 13);
      const ScaledResidue g = greene_binomial(a, b, chars);
      EXPECT_EQ(g.times_p_power(1).to_residue(2), chars.value(b, 12) * j);
    }
  }
}

// Greene's series from its definition: p/(p-1) sum_chi prod_i (A_i chi over chi), with every
// binomial rebuilt from a direct Jacobi sum.
Residue greene_series_times_pn(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& fr,
                               const TeichmullerChar& chars) {
  const auto p = static_cast<std::int64_t>(chars.p());
  const ResidueRing& ring = chars.ring();
  Residue total = ring.zero();
  for (std::int64_t c = 0; c < p - 1; ++c) {
    Residue prod = ring.one();
    for (auto [m, d] : fr) {
      const auto a = static_cast<std::int64_t>(m) * (p - 1) / static_cast<std::int64_t>(d);
      Residue j = ring.zero();
      for (std::int64_t t = 0; t < p; ++t) j += chars.value(a + c, t) * chars.value(-c, (1 - t + p) % p);
      prod *= chars.value(c, p - 1) * j;
    }
    total += prod;
  }
  return total * residue_inv(ring(p - 1));
}

TEST(GaussianHgs, MatchesCharacterSumOracle) {
  for (std::uint64_t p : {7, 13, 19}) {
    const TeichmullerChar chars(ResidueRing(p, 3));
    const std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> families{
        {{1, 2}, {1, 2}}, {{1, 3}, {2, 3}}, {{1, 2}, {1, 3}, {2, 3}}, {{1, 6}, {5, 6}, {1, 2}, {1, 2}}};
    for (const auto& fr : families) {
      const int n = static_cast<int>(fr.size()) - 1;
      EXPECT_EQ(gaussian_hgs(fr, chars).times_p_power(n).to_residue(3), greene_series_times_pn(fr, chars)) << p;
    }
  }
}

TEST(GaussianHgs, EqualsGFunctionForPOneModD) {
  const GammaTable t = build_gamma_table(11, 2);
  const TeichmullerChar chars(t.ring());
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> fr{{1, 5}, {2, 5}, {3, 5}, {4, 5}};
  const std::vector<Rational> args{q(1, 5), q(2, 5), q(3, 5), q(4, 5)};
  EXPECT_EQ(g_function(args, t), -gaussian_hgs(fr, chars).times_p_power(3).to_residue(2));
}

TEST(GaussianHgs, QuinticAtElevenGivesC11) {
  const TeichmullerChar chars(ResidueRing(11, 3));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> fr{{1, 5}, {2, 5}, {3, 5}, {4, 5}};
  const Residue v = -gaussian_hgs(fr, chars).times_p_power(3).to_residue(3) - chars.ring()(11);
  EXPECT_EQ(balanced_lift(v), newform_coeff(ModularForm::C, 11, 100));
}

TEST(GaussianHgs, NeedsPOneModD) {
  const TeichmullerChar chars(ResidueRing(7, 2));
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> fr{{1, 5}, {4, 5}};
  try {
    gaussian_hgs(fr, chars);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPrime);
  }
}

TEST(ScaledResidue, PrecisionIsTracked) {
  const ResidueRing r(7, 3);
  const ScaledResidue x(r(49 * 3), 2);
  EXPECT_EQ(x.precision(), 1);
  EXPECT_EQ(x.to_residue(1), ResidueRing(7, 1)(3));
  try {
    x.to_residue(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionTooLow);
  }
  EXPECT_THROW(ScaledResidue(r(3), 1).to_residue(1), Error);
  EXPECT_EQ(x.times_p_power(2).to_residue(3), r(147));
}

}  // namespace
}  // namespace scv
