#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "scv/residue.hpp"

namespace scv {

/// Both sides of an identity evaluated exactly.
struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// (-1)^{m+n} against the binomial/harmonic double sum. 1 <= n <= m.
IdentityCheck identity_corollary1(std::uint64_t m, std::uint64_t n);

/// x (1-x)_n (1-x)_m / ((x)_{n+1} (x)_{m+1}) against its partial fraction
/// expansion at each sample. Samples at 0, -1, ..., -m raise PoleSample.
std::vector<IdentityCheck> identity_theorem1(std::uint64_t m, std::uint64_t n, std::span<const Rational> samples);

/// The same expansion weighted by C1 sum_{s=P-n}^{n} 1/(s-x) + C2 sum_{s=P-m}^{m} 1/(s-x).
/// Needs P > m >= n >= P/2 (m = P would need H_{-1}); samples must avoid
/// 0, -1, ..., -m and P-m, ..., m.
std::vector<IdentityCheck> identity_theorem2(std::uint64_t P, std::uint64_t m, std::uint64_t n, const Rational& c1,
                                             const Rational& c2, std::span<const Rational> samples);

/// The x -> infinity limit of the weighted expansion: lhs is 0.
IdentityCheck identity_corollary2(std::uint64_t P, std::uint64_t m, std::uint64_t n, const Rational& c1,
                                  const Rational& c2);

/// Denominator degree of the rational function in identity_theorem1/2.
std::uint64_t identity_degree(std::uint64_t m, std::uint64_t n, std::uint64_t P = 0);

/// The first `count` terms of a fixed sequence of small rationals
/// (Calkin-Wilf order, alternating sign) that pass `keep`.
std::vector<Rational> sample_points(std::size_t count, const std::function<bool(const Rational&)>& keep);

}  // namespace scv
