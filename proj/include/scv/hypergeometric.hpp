#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scv/characters.hpp"
#include "scv/padic_gamma.hpp"
#include "scv/residue.hpp"

namespace scv {

struct HypParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z = 1;
  std::uint64_t m = 0;
};

/// sum_{n=0}^{m} prod (a_i)_n / (prod (b_i)_n n!) z^n reduced mod p^k.
/// Each term is tracked as p^v * unit so factors of p in individual
/// Pochhammer ratios cancel correctly; the sum itself must be p-integral.
Residue trunc_hyp(const HypParams& params, const ResidueRing& ring);

enum class AperyKind { A, B };

/// A(n) = sum_j C(n+j,j)^2 C(n,j)^2, B(n) = sum_j C(n+j,j) C(n,j)^2.
BigInt apery(std::uint64_t n, AperyKind kind);

/// The p-adic function _{n+1}G(x_1, ..., x_{n+1})_p mod p^k for fractions
/// in (0, 1) with p-unit denominators. The arguments may come in any order.
Residue g_function(std::span<const Rational> fractions, const GammaTable& gamma);

/// mantissa * p^{-scale}. Only k - max(scale, 0) p-adic digits are genuine.
class ScaledResidue {
 public:
  ScaledResidue(Residue mantissa, int scale) : mantissa_(std::move(mantissa)), scale_(scale) {}

  const Residue& mantissa() const { return mantissa_; }
  int scale() const { return scale_; }
  int precision() const;

  /// Multiply by p^e; only lowers the scale, the mantissa is untouched.
  ScaledResidue times_p_power(int e) const { return {mantissa_, scale_ - e}; }
  ScaledResidue operator*(const ScaledResidue& o) const;
  ScaledResidue operator*(const Residue& s) const { return {mantissa_ * s, scale_}; }

  /// The value as a p-adic integer mod p^digits. PrecisionTooLow if fewer
  /// digits are genuine, NotPAdicInteger if the value has a pole at p.
  Residue to_residue(unsigned digits) const;

 private:
  Residue mantissa_;
  int scale_;
};

/// Greene's binomial (A over B) = B(-1)/p * J(A, conj(B)) for A = T^a, B = T^b.
ScaledResidue greene_binomial(std::int64_t a, std::int64_t b, const TeichmullerChar& chars);

/// Greene's _{n+1}F_n(T^{a_0}, ..., T^{a_n}; eps, ..., eps | 1) with
/// a_i = m_i (p-1)/d_i. Needs p = 1 mod d_i for every i.
ScaledResidue gaussian_hgs(std::span<const std::pair<std::uint64_t, std::uint64_t>> fractions,
                           const TeichmullerChar& chars);

/// Gamma_p(x_1) ... Gamma_p(x_r).
Residue gamma_product(std::span<const Rational> args, const GammaTable& gamma);

}  // namespace scv
