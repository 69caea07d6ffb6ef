#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace scv {

using BigInt = mpz_class;
using Rational = mpq_class;

class Residue;

/// Z / p^k Z for a prime p. The modulus is kept below 2^62 so that every
/// product of two canonical representatives fits an unsigned 128-bit word.
class ResidueRing {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  ResidueRing(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue operator()(std::int64_t v) const;
  Residue from(const BigInt& v) const;
  /// v must already lie in [0, modulus).
  Residue from_canonical(std::uint64_t v) const;
  Residue zero() const;
  Residue one() const;

  /// Same prime, different exponent.
  ResidueRing with_power(unsigned k) const { return ResidueRing(p_, k); }

  friend bool operator==(const ResidueRing&, const ResidueRing&) = default;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t modulus_;
};

/// A canonical representative in [0, p^k). Balanced representatives are only
/// produced by balanced_lift().
class Residue {
 public:
  Residue(const ResidueRing& ring, std::uint64_t canonical) : ring_(ring), value_(canonical) {}

  std::uint64_t value() const { return value_; }
  const ResidueRing& ring() const { return ring_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return value_ % ring_.p() != 0; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue operator*(std::int64_t s) const { return *this * ring_(s); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue pow(std::uint64_t e) const;
  /// Image under Z/p^k -> Z/p^j for j <= k.
  Residue reduce_to(unsigned j) const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  ResidueRing ring_;
  std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

Residue residue_inv(const Residue& a);

/// numerator * denominator^{-1} mod p^k.
Residue reduce_rational(const Rational& x, const ResidueRing& ring);

/// The basic representative of x mod p in {0, ..., p-1}.
std::uint64_t rep_p(const Rational& x, std::uint64_t p);

/// Euler's criterion for odd p.
int legendre(const BigInt& a, std::uint64_t p);
inline int legendre(std::int64_t a, std::uint64_t p) { return legendre(BigInt(static_cast<long>(a)), p); }

/// The unique t = a (mod p^k) with -p^k/2 < t <= p^k/2.
BigInt balanced_lift(const Residue& a);

/// p-adic valuation; the argument must be nonzero.
int valuation(const BigInt& n, std::uint64_t p);
int valuation(const Rational& x, std::uint64_t p);

/// Nonnegative remainder of a big integer modulo m.
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

BigInt to_bigint(std::uint64_t v);
BigInt to_bigint(std::int64_t v);
std::string to_string(const Rational& x);

}  // namespace scv
