#include "scv/padic_gamma.hpp"

#include <numeric>

#include "scv/error.hpp"

namespace scv {

GammaTable build_gamma_table(std::uint64_t p, unsigned k, std::uint64_t entry_limit) {
  if (p < 3) throw Error(ErrorKind::BadPrime, "Gamma_p tables need an odd prime");
  if (k < 1 || k > 3) throw Error(ErrorKind::BadRange, "Gamma_p tables support 1 <= k <= 3");
  ResidueRing ring(p, k);
  const std::uint64_t size = ring.modulus();
  if (size > entry_limit || size > UINT32_MAX) {
    throw Error(ErrorKind::CapacityExceeded,
                std::to_string(p) + "^" + std::to_string(k) + " entries exceed the table limit");
  }
  GammaTable table(ring);
  table.values_.resize(size);
  const std::uint64_t m = size;
  std::uint64_t g = 1;
  table.values_[0] = 1;
  for (std::uint64_t n = 0; n + 1 < size; ++n) {
    if (n % p != 0) g = g * n % m;  // m < 2^32 so the product fits
    g = g == 0 ? 0 : m - g;
    table.values_[n + 1] = static_cast<std::uint32_t>(g);
  }
  return table;
}

Residue gamma_at(const Rational& x, const GammaTable& table) { return table[reduce_rational(x, table.ring())]; }

LogDerivs log_derivs(const Rational& x, const GammaTable& table) {
  const ResidueRing& ring = table.ring();
  const std::uint64_t p = ring.p();
  if (ring.k() < 3) throw Error(ErrorKind::PrecisionTooLow, "log_derivs needs a mod p^3 table");
  if (p < 7) throw Error(ErrorKind::BadPrime, "log_derivs needs p >= 7");

  Residue base = reduce_rational(x, ring);
  Residue shift = ring(static_cast<std::int64_t>(p));
  Residue g0_inv = residue_inv(table[base]);
  Residue a = table[base + shift] * g0_inv - ring.one();
  Residue b = table[base + shift + shift] * g0_inv - ring.one();

  const std::uint64_t p2 = p * p;
  Residue second = b - a - a;  // p^2 G_2
  Residue first = a * 4 - b;   // 2p G_1
  if (second.value() % p2 != 0 || first.value() % p != 0) {
    throw Error(ErrorKind::PrecisionTooLow, "finite differences are not divisible as expected");
  }
  ResidueRing r1 = ring.with_power(1);
  ResidueRing r2 = ring.with_power(2);
  Residue g2 = r1.from_canonical(second.value() / p2 % p);
  Residue g1 = r2.from_canonical(first.value() / p % r2.modulus()) * residue_inv(r2(2));
  return {g1, g2};
}

HarmonicValue harmonic(std::uint64_t n, unsigned order) {
  Rational sum = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    BigInt denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), j, order);
    sum += Rational(1, denom);
  }
  sum.canonicalize();
  return {n, order, sum};
}

Rational pochhammer(const Rational& a, std::uint64_t n) {
  Rational r = 1;
  for (std::uint64_t i = 0; i < n; ++i) r *= a + Rational(static_cast<unsigned long>(i));
  r.canonicalize();
  return r;
}

namespace {

void check_shift_args(std::uint64_t m, std::uint64_t d, std::uint64_t j, std::uint64_t p) {
  if (!(1 <= m && m < d && d < p)) throw Error(ErrorKind::BadRange, "need 1 <= m < d < p");
  if (j > p - 1) throw Error(ErrorKind::BadRange, "j must lie in [0, p-1]");
}

Rational frac(std::uint64_t m, std::uint64_t d) {
  Rational r(static_cast<unsigned long>(m), static_cast<unsigned long>(d));
  r.canonicalize();
  return r;
}

}  // namespace

GammaShift gamma_shift(std::uint64_t m, std::uint64_t d, std::uint64_t j, const GammaTable& table) {
  const std::uint64_t p = table.ring().p();
  check_shift_args(m, d, j, p);
  const Rational x = frac(m, d);
  const std::uint64_t rep = rep_p(x, p);
  Rational closed = pochhammer(x, j);
  if (j & 1) closed = -closed;
  int e = 0;
  if (j >= p - rep + 1) {
    closed /= x + Rational(static_cast<unsigned long>(p - rep));
    e = 1;
  }
  Residue predicted = gamma_at(x, table) * reduce_rational(closed, table.ring());
  return {gamma_at(x + Rational(static_cast<unsigned long>(j)), table), predicted, e};
}

GammaShift gamma_pair_product(std::uint64_t m, std::uint64_t d, std::uint64_t j, const GammaTable& table) {
  const std::uint64_t p = table.ring().p();
  if (!(d == 2 || d == 3 || d == 4 || d == 6)) throw Error(ErrorKind::BadRange, "pair product needs phi(d) <= 2");
  if (m != 1 && m != d - 1) throw Error(ErrorKind::BadRange, "m must be 1 or d-1");
  check_shift_args(m, d, j, p);
  const Rational lo = frac(1, d), hi = frac(d - 1, d);
  const std::uint64_t r = (p - 1) / d;
  Rational closed = pochhammer(lo, j) * pochhammer(hi, j);
  int e = 0;
  if (j >= p - r) {
    closed *= Rational(static_cast<unsigned long>(d * d), static_cast<unsigned long>((d - 1) * p * p));
    e = 2;
  } else if (j >= r + 1) {
    closed *= Rational(static_cast<unsigned long>(d), static_cast<unsigned long>(p));
    e = 1;
  }
  closed.canonicalize();
  Residue predicted = gamma_at(lo, table) * gamma_at(hi, table) * reduce_rational(closed, table.ring());
  const Rational shift(static_cast<unsigned long>(j));
  Residue actual = gamma_at(frac(m, d) + shift, table) * gamma_at(frac(d - m, d) + shift, table);
  return {actual, predicted, e};
}

}  // namespace scv
