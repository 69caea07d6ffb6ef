#pragma once

#include <cstdint>
#include <vector>

#include "scv/residue.hpp"

namespace scv {

/// Gamma_p(n) mod p^k for every 0 <= n < p^k. Since Gamma_p is
/// p^k-Lipschitz in the sense x = y (mod p^k) => Gamma_p(x) = Gamma_p(y)
/// (mod p^k), this table evaluates Gamma_p on all of Z_p at that precision.
class GammaTable {
 public:
  /// Default cap on the number of entries (4 bytes each).
  static constexpr std::uint64_t kDefaultEntryLimit = std::uint64_t{1} << 25;

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t size() const { return values_.size(); }

  Residue at_index(std::uint64_t n) const { return ring_.from_canonical(values_[n]); }
  /// Gamma_p at the residue class of x (x must live in ring()).
  Residue operator[](const Residue& x) const { return at_index(x.value()); }

 private:
  friend GammaTable build_gamma_table(std::uint64_t, unsigned, std::uint64_t);
  explicit GammaTable(const ResidueRing& ring) : ring_(ring) {}

  ResidueRing ring_;
  std::vector<std::uint32_t> values_;
};

/// One pass of the recurrence Gamma_p(n+1) = -n Gamma_p(n) (p does not divide
/// n), -Gamma_p(n) otherwise, from Gamma_p(0) = 1. p odd, 1 <= k <= 3.
GammaTable build_gamma_table(std::uint64_t p, unsigned k,
                             std::uint64_t entry_limit = GammaTable::kDefaultEntryLimit);

Residue gamma_at(const Rational& x, const GammaTable& table);

/// G_1 = Gamma_p'/Gamma_p known mod p^2 and G_2 = Gamma_p''/Gamma_p mod p.
struct LogDerivs {
  Residue g1;
  Residue g2;
};

/// Finite-difference extraction from the order-two expansion of
/// Gamma_p(x + z), z in pZ_p, valid mod p^3. Needs p >= 7 and a k = 3 table.
LogDerivs log_derivs(const Rational& x, const GammaTable& table);

struct HarmonicValue {
  std::uint64_t n;
  unsigned order;
  Rational value;
};

/// Exact H_n^{(i)} = sum_{j=1}^n 1/j^i, with H_0^{(i)} = 0.
HarmonicValue harmonic(std::uint64_t n, unsigned order);

/// Rising factorial (a)_n, (a)_0 = 1.
Rational pochhammer(const Rational& a, std::uint64_t n);

/// Gamma_p at a shifted argument, read from the table and compared with the
/// closed form Gamma_p(base) * Pochhammer * (explicit p-power correction).
struct GammaShift {
  Residue table_value;
  Residue closed_form;
  /// Power of p removed by the correction factor (0, 1 or 2).
  int p_exponent;
};

/// Gamma_p(m/d + j) = (-1)^j Gamma_p(m/d) (m/d)_j, with (m/d)_j divided by
/// its single factor m/d + p - rep(m/d) once j passes p - rep(m/d).
/// Requires 1 <= m < d < p and 0 <= j <= p - 1.
GammaShift gamma_shift(std::uint64_t m, std::uint64_t d, std::uint64_t j, const GammaTable& table);

/// Gamma_p(1/d + j) Gamma_p((d-1)/d + j) for phi(d) <= 2, with the three
/// ranges of j carrying corrections 1, d/p and d^2/((d-1)p^2).
/// m selects which of the pair is listed first and must be 1 or d-1.
GammaShift gamma_pair_product(std::uint64_t m, std::uint64_t d, std::uint64_t j, const GammaTable& table);

}  // namespace scv
