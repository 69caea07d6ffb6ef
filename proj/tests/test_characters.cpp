#include <gtest/gtest.h>

#include <vector>

#include "scv/characters.hpp"
#include "scv/error.hpp"
#include "scv/primes.hpp"
#include "support.hpp"

namespace scv {
namespace {

// Direct sum over t_1 + ... + t_r = 1, enumerating all but the last coordinate.
Residue brute_jacobi(const std::vector<std::int64_t>& e, const TeichmullerChar& chars) {
  const auto p = static_cast<std::int64_t>(chars.p());
  const std::size_t r = e.size();
  std::vector<std::int64_t> t(r - 1, 0);
  Residue total = chars.ring().zero();
  while (true) {
    std::int64_t used = 0;
    Residue term = chars.ring().one();
    for (std::size_t i = 0; i + 1 < r; ++i) {
      term *= chars.value(e[i], t[i]);
      used += t[i];
    }
    term *= chars.value(e[r - 1], ((1 - used) % p + p) % p);
    total += term;
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == p) t[i++] = 0;
    if (i == t.size()) break;
  }
  return total;
}

TEST(Teichmuller, SpecExamples) {
  const ResidueRing r3(7, 3);
  EXPECT_EQ(teichmuller(1, r3).value(), 1u);
  EXPECT_EQ(teichmuller(6, r3).value(), r3.modulus() - 1);
  EXPECT_EQ(teichmuller(2, ResidueRing(5, 2)).value(), 7u);
  EXPECT_EQ(teichmuller(0, r3).value(), 0u);
}

TEST(Teichmuller, IsTheMultiplicativeLift) {
  for (std::uint64_t p : primes_in(3, 31)) {
    const ResidueRing ring(p, 3);
    const TeichmullerChar chars(ring);
    for (std::uint64_t x = 1; x < p; ++x) {
      const Residue w = teichmuller(x, ring);
      EXPECT_EQ(w.value() % p, x);
      EXPECT_EQ(w.pow(p - 1), ring.one());
      EXPECT_EQ(chars.omega(static_cast<std::int64_t>(x)), w);
      for (std::uint64_t y = 1; y < p; ++y) EXPECT_EQ(teichmuller(x * y % p, ring), w * teichmuller(y, ring));
    }
  }
}

TEST(CharValue, SpecExamples) {
  const TeichmullerChar chars(ResidueRing(11, 2));
  EXPECT_EQ(char_value(0, 1, chars).value(), 1u);
  for (std::int64_t n = -12; n <= 12; ++n) EXPECT_EQ(char_value(n, 0, chars).value(), 0u);
  EXPECT_EQ(char_value(3, 2, chars) * chars.omega(2).pow(3), chars.ring().one());
}

TEST(CharValue, Orthogonality) {
  for (std::uint64_t p : primes_in(3, 31)) {
    const TeichmullerChar chars(ResidueRing(p, 2));
    const auto n_chars = static_cast<std::int64_t>(p - 1);
    for (std::int64_t n = 0; n < n_chars; ++n) {
      Residue s = chars.ring().zero();
      for (std::int64_t x = 0; x < static_cast<std::int64_t>(p); ++x) s += char_value(n, x, chars);
      EXPECT_EQ(s, chars.ring()(n == 0 ? n_chars : 0));
    }
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(p); ++x) {
      Residue s = chars.ring().zero();
      for (std::int64_t n = 0; n < n_chars; ++n) s += char_value(n, x, chars);
      EXPECT_EQ(s, chars.ring()(x == 1 ? n_chars : 0));
    }
  }
}

TEST(GaussSum, SpecExamples) {
  const GammaTable gamma = build_gamma_table(7, 2);
  const ResidueRing& ring = gamma.ring();
  EXPECT_EQ(gauss_sum(0, gamma), PiAdicElement::scalar(-ring.one()));
  EXPECT_EQ(gauss_sum(0, gamma) * gauss_sum(0, gamma), PiAdicElement::scalar(ring.one()));
  const TeichmullerChar chars(ring);
  EXPECT_EQ(gauss_sum(3, gamma) * gauss_sum(3, gamma), PiAdicElement::scalar(char_value(3, -1, chars) * 7));
  EXPECT_THROW(gauss_sum(6, gamma), Error);
  EXPECT_THROW(gauss_sum(-1, gamma), Error);
}

TEST(GaussSum, ProductWithConjugate) {
  for (std::uint64_t p : primes_in(5, 31)) {
    const GammaTable gamma = build_gamma_table(p, 2);
    const TeichmullerChar chars(gamma.ring());
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(p) - 1; ++j) {
      const PiAdicElement prod = gauss_sum(j, gamma) * gauss_sum(static_cast<std::int64_t>(p) - 1 - j, gamma);
      EXPECT_EQ(prod, PiAdicElement::scalar(char_value(j, -1, chars) * static_cast<std::int64_t>(p))) << p << ' ' << j;
    }
  }
}

TEST(GaussSums, MonomialsAgreeWithRingElements) {
  const GammaTable gamma = build_gamma_table(13, 2);
  const GaussSums g(gamma);
  for (std::int64_t j = 0; j < 12; ++j) {
    EXPECT_EQ(g(j).to_pi_adic(), gauss_sum(j, gamma));
    EXPECT_EQ(g(j - 12).to_pi_adic(), gauss_sum(j, gamma));
  }
}

TEST(HasseDavenport, OrderThreeAtThirteen) {
  const std::int64_t p = 13, m = 3, step = (p - 1) / m;
  const GammaTable gamma = build_gamma_table(13, 2);
  const TeichmullerChar chars(gamma.ring());
  const GaussSums g(gamma);
  for (std::int64_t e = 0; e < p - 1; ++e) {
    PiAdicElement lhs = PiAdicElement::scalar(gamma.ring().one());
    for (std::int64_t i = 0; i < m; ++i) lhs = lhs * g(i * step + e).to_pi_adic();
    PiAdicElement rhs = g(m * e).to_pi_adic() * char_value(-m * e, m, chars);
    for (std::int64_t i = 1; i < m; ++i) rhs = rhs * g(i * step).to_pi_adic();
    EXPECT_EQ(lhs, rhs) << e;
  }
}

TEST(JacobiSum, SpecExamples) {
  const TeichmullerChar chars(ResidueRing(7, 2));
  const std::vector<std::int64_t> ee{0, 0}, ec{0, 1}, cc{1, -1};
  EXPECT_EQ(jacobi_sum(ee, chars), chars.ring()(5));
  EXPECT_EQ(jacobi_sum(ec, chars), chars.ring()(-1));
  EXPECT_EQ(jacobi_sum(cc, chars), -char_value(1, -1, chars));
}

TEST(JacobiSum, AllThreeRoutesMatchTheDirectSum) {
  for (std::uint64_t p : {5, 7, 11}) {
    const GammaTable gamma = build_gamma_table(p, 2);
    const TeichmullerChar chars(gamma.ring());
    const GaussSums g(gamma);
    const auto n = static_cast<std::int64_t>(p - 1);
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        const std::vector<std::int64_t> e{a, b};
        const Residue oracle = brute_jacobi(e, chars);
        EXPECT_EQ(jacobi_sum(e, chars), oracle);
        EXPECT_EQ(jacobi_by_reduction(e, chars), oracle);
        if (a != 0 || b != 0) EXPECT_EQ(jacobi_from_gauss(e, g), oracle) << p << ' ' << a << ' ' << b;
      }
    }
  }
}

TEST(JacobiSum, HigherArity) {
  for (std::uint64_t p : {5, 7}) {
    const GammaTable gamma = build_gamma_table(p, 2);
    const TeichmullerChar chars(gamma.ring());
    const GaussSums g(gamma);
    const auto n = static_cast<std::int64_t>(p - 1);
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        for (std::int64_t c = 0; c < n; c += 2) {
          const std::vector<std::int64_t> e3{a, b, c};
          const Residue oracle = brute_jacobi(e3, chars);
          EXPECT_EQ(jacobi_sum(e3, chars), oracle);
          EXPECT_EQ(jacobi_by_reduction(e3, chars), oracle);
          if (a || b || c) EXPECT_EQ(jacobi_from_gauss(e3, g), oracle);
        }
      }
    }
    const std::vector<std::int64_t> e4{1, 2, 0, 3};
    EXPECT_EQ(jacobi_sum(e4, chars), brute_jacobi(e4, chars));
  }
}

TEST(JacobiSum, AllTrivialClosedForm) {
  const TeichmullerChar chars(ResidueRing(11, 3));
  for (std::size_t r = 2; r <= 4; ++r) {
    const std::vector<std::int64_t> e(r, 0);
    BigInt power = 1;
    for (std::size_t i = 0; i < r; ++i) power *= 10;
    const BigInt expect = (power + (r % 2 ? 1 : -1)) / 11;
    EXPECT_EQ(jacobi_sum(e, chars), chars.ring().from(expect));
  }
}

TEST(JacobiFromGauss, AllTrivialIsRejected) {
  const GaussSums g(build_gamma_table(7, 2));
  const std::vector<std::int64_t> e{0, 6, 0};
  EXPECT_THROW(jacobi_from_gauss(e, g), Error);
}

TEST(PiAdicElement, FoldsHighDegrees) {
  const ResidueRing ring(5, 3);
  const PiAdicElement pi = PiAdicElement::monomial(ring.one(), 1);
  PiAdicElement acc = PiAdicElement::scalar(ring.one());
  for (int i = 0; i < 4; ++i) acc = acc * pi;
  EXPECT_EQ(acc, PiAdicElement::scalar(ring(-5)));
  EXPECT_EQ(PiAdicElement::monomial(ring.one(), 9), PiAdicElement::monomial(ring(25), 1));
  EXPECT_FALSE(pi.is_scalar());
  try {
    pi.scalar_value();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PiResidueNonScalar);
  }
}

}  // namespace
}  // namespace scv
