#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scv/padic_gamma.hpp"
#include "scv/residue.hpp"

namespace scv {

/// omega(x) = x^{p^{k-1}} mod p^k, the Teichmuller lift of x in F_p.
Residue teichmuller(std::uint64_t x, const ResidueRing& ring);

/// Character table for the fixed generator T = conj(omega) of the character
/// group of F_p, valued in Z/p^k. Every character is extended by chi(0) = 0,
/// the trivial one included.
class TeichmullerChar {
 public:
  explicit TeichmullerChar(const ResidueRing& ring);

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t p() const { return ring_.p(); }

  Residue omega(std::int64_t x) const;
  /// T^n(x) = omega(x)^{-n}.
  Residue value(std::int64_t n, std::int64_t x) const;
  /// Discrete log of a nonzero x to the base of the internal generator.
  std::uint64_t log(std::int64_t x) const;

 private:
  std::uint64_t reduce(std::int64_t x) const;

  ResidueRing ring_;
  std::vector<std::uint64_t> omega_;
  std::vector<std::uint64_t> generator_powers_;  // omega(g)^i
  std::vector<std::uint32_t> log_;
};

Residue char_value(std::int64_t n, std::int64_t x, const TeichmullerChar& chars);

/// Element of Z_p[pi]/(pi^{p-1} + p), coefficients of 1, pi, ..., pi^{p-2}
/// kept mod p^k. Coefficientwise equality mod p^k is exact for identities
/// between integral polynomial expressions; pi itself has valuation
/// 1/(p-1), so high coefficients overstate their true precision.
class PiAdicElement {
 public:
  explicit PiAdicElement(const ResidueRing& ring);
  static PiAdicElement scalar(const Residue& c);
  /// c * pi^degree, folding pi^{p-1} = -p for degree >= p-1.
  static PiAdicElement monomial(const Residue& c, std::uint64_t degree);

  const ResidueRing& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  Residue coeff(std::size_t i) const { return ring_.from_canonical(coeffs_[i]); }
  bool is_scalar() const;
  /// Coefficient of pi^0; throws PiResidueNonScalar unless is_scalar().
  Residue scalar_value() const;

  PiAdicElement operator+(const PiAdicElement& o) const;
  PiAdicElement operator-(const PiAdicElement& o) const;
  PiAdicElement operator*(const PiAdicElement& o) const;
  PiAdicElement operator*(const Residue& s) const;

  friend bool operator==(const PiAdicElement&, const PiAdicElement&) = default;

 private:
  ResidueRing ring_;
  std::vector<std::uint64_t> coeffs_;
};

/// Exact c * pi^degree with a unit-or-zero coefficient and an unbounded
/// (possibly negative) degree. Products of Gauss sums stay in this form, so
/// the pi^{p-1} = -p folding only happens once, at the end.
struct GaussMonomial {
  Residue coef;
  std::int64_t degree;

  GaussMonomial operator*(const GaussMonomial& o) const { return {coef * o.coef, degree + o.degree}; }
  GaussMonomial operator*(const Residue& s) const { return {coef * s, degree}; }
  GaussMonomial inverse() const { return {residue_inv(coef), -degree}; }

  PiAdicElement to_pi_adic() const;
  /// value / p^divide as an element of Z/p^k. The degree must be a multiple
  /// of p-1 (else PiResidueNonScalar) and the result p-integral.
  Residue scalar(int divide = 0) const;
};

/// The Gauss sums G_m = G(T^m) via Gross-Koblitz: G(conj(omega)^j) =
/// -pi^j Gamma_p(j/(p-1)), 0 <= j <= p-2; the index m is read mod p-1.
class GaussSums {
 public:
  explicit GaussSums(const GammaTable& gamma);

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t p() const { return ring_.p(); }
  const GaussMonomial& operator()(std::int64_t m) const;

 private:
  ResidueRing ring_;
  std::vector<GaussMonomial> sums_;
};

/// G(conj(omega)^j) as a ring element; j outside [0, p-2] is BadRange.
PiAdicElement gauss_sum(std::int64_t j, const GammaTable& gamma);

/// J(T^{e_1}, ..., T^{e_r}) = sum over t_1 + ... + t_r = 1 of prod T^{e_i}(t_i),
/// by iterated convolution.
Residue jacobi_sum(std::span<const std::int64_t> exponents, const TeichmullerChar& chars);

/// The same sum rebuilt from Gauss sums: G(chi_1)...G(chi_r)/G(chi_1...chi_r)
/// when the product character is nontrivial, -G(chi_1)...G(chi_r)/p otherwise.
Residue jacobi_from_gauss(std::span<const std::int64_t> exponents, const GaussSums& gauss);

/// The same sum through the recursive reduction on the last character.
Residue jacobi_by_reduction(std::span<const std::int64_t> exponents, const TeichmullerChar& chars);

}  // namespace scv
