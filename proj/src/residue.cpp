#include "scv/residue.hpp"

#include <ostream>

#include "scv/error.hpp"
#include "scv/primes.hpp"

namespace scv {

namespace {

using u128 = unsigned __int128;

}  // namespace

ResidueRing::ResidueRing(std::uint64_t p, unsigned k) : p_(p), k_(k), modulus_(1) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::BadRange, "exponent must be at least 1");
  for (unsigned i = 0; i < k; ++i) {
    if (modulus_ > kMaxModulus / p) {
      throw Error(ErrorKind::CapacityExceeded,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds the native modulus width");
    }
    modulus_ *= p;
  }
}

Residue ResidueRing::operator()(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Residue(*this, static_cast<std::uint64_t>(r));
}

Residue ResidueRing::from(const BigInt& v) const { return Residue(*this, mod_u64(v, modulus_)); }

Residue ResidueRing::from_canonical(std::uint64_t v) const { return Residue(*this, v); }

Residue ResidueRing::zero() const { return Residue(*this, 0); }

Residue ResidueRing::one() const { return Residue(*this, 1 % modulus_); }

Residue Residue::operator+(const Residue& o) const {
  std::uint64_t m = ring_.modulus();
  std::uint64_t s = value_ + o.value_;
  return Residue(ring_, s >= m ? s - m : s);
}

Residue Residue::operator-(const Residue& o) const {
  std::uint64_t m = ring_.modulus();
  return Residue(ring_, value_ >= o.value_ ? value_ - o.value_ : value_ + m - o.value_);
}

Residue Residue::operator*(const Residue& o) const {
  return Residue(ring_, static_cast<std::uint64_t>(static_cast<u128>(value_) * o.value_ % ring_.modulus()));
}

Residue Residue::operator-() const { return Residue(ring_, value_ == 0 ? 0 : ring_.modulus() - value_); }

Residue Residue::pow(std::uint64_t e) const {
  Residue r = ring_.one();
  Residue b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Residue Residue::reduce_to(unsigned j) const {
  if (j > ring_.k()) throw Error(ErrorKind::PrecisionTooLow, "cannot raise precision by reduction");
  ResidueRing target = ring_.with_power(j);
  return Residue(target, value_ % target.modulus());
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.ring().modulus() << ")";
}

Residue residue_inv(const Residue& a) {
  if (!a.is_unit()) {
    throw Error(ErrorKind::NonUnit, std::to_string(a.value()) + " is divisible by " + std::to_string(a.ring().p()));
  }
  // extended Euclid on signed 128-bit words
  __int128 r0 = static_cast<__int128>(a.ring().modulus()), r1 = a.value();
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  __int128 m = a.ring().modulus();
  t0 %= m;
  if (t0 < 0) t0 += m;
  return a.ring().from_canonical(static_cast<std::uint64_t>(t0));
}

Residue reduce_rational(const Rational& x, const ResidueRing& ring) {
  if (mod_u64(x.get_den(), ring.p()) == 0) {
    throw Error(ErrorKind::NotPAdicInteger, to_string(x) + " has denominator divisible by " + std::to_string(ring.p()));
  }
  return ring.from(x.get_num()) * residue_inv(ring.from(x.get_den()));
}

std::uint64_t rep_p(const Rational& x, std::uint64_t p) {
  return reduce_rational(x, ResidueRing(p, 1)).value();
}

int legendre(const BigInt& a, std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::BadPrime, "Legendre symbol needs an odd prime");
  ResidueRing f(p, 1);
  Residue r = f.from(a);
  if (r.is_zero()) return 0;
  return r.pow((p - 1) / 2).value() == 1 ? 1 : -1;
}

BigInt balanced_lift(const Residue& a) {
  BigInt v = to_bigint(a.value());
  BigInt m = to_bigint(a.ring().modulus());
  if (2 * v > m) v -= m;
  return v;
}

int valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorKind::BadRange, "valuation of zero");
  BigInt q = n;
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Rational& x, std::uint64_t p) { return valuation(x.get_num(), p) - valuation(x.get_den(), p); }

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

BigInt to_bigint(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace scv
