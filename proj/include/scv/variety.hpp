#pragma once

#include <cstdint>
#include <vector>

#include "scv/characters.hpp"
#include "scv/padic_gamma.hpp"
#include "scv/residue.hpp"

namespace scv {

/// Projective point count of x0^5 + ... + x4^5 - 5 x0 x1 x2 x3 x4 = 0 over F_p.
struct CountResult {
  std::uint64_t p;
  BigInt points;
  /// charts[i] counts the points whose first nonzero coordinate is x_i (scaled to 1).
  std::vector<BigInt> charts;
};

/// Chart-by-chart enumeration, O(p^4). p = 5 is BadPrime, p > enum_cap CapacityExceeded.
CountResult count_quintic(std::uint64_t p, std::uint64_t enum_cap = 31, unsigned threads = 1);

/// s(p) = +1 for p = 1, 4 (mod 5), -1 for p = 2, 3 (mod 5).
int quintic_sign(std::uint64_t p);

/// c(p) recovered from a point count through the three residue-class formulas.
BigInt c_from_points(std::uint64_t p, const BigInt& points);

/// The character sums A, B, C, D (their Gauss-sum forms, mod p^k).
struct CharSums {
  Residue a, b, c, d;
};

/// p = 2 is handled directly (all characters trivial); otherwise the sums
/// are built from Gross-Koblitz Gauss sums read off `gamma`.
CharSums char_sum_abcd(std::uint64_t p, const GammaTable* gamma);

/// p^4 + p^3 + p^2 + p - 4 + 10A + 10B + 5C + D, which equals p N_p.
Residue point_count_from_sums(const CharSums& sums);

/// -1/(p-1) [1 + 1/p sum_{j=1}^{p-2} G_{-j}^5 G_{5j} T^{-5j}(-5)] - s(p) p
/// from a k = 3 table, balanced-lifted.
BigInt theorem51_check(const GammaTable& gamma);

}  // namespace scv
