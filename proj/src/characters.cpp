#include "scv/characters.hpp"

#include <numeric>

#include "scv/error.hpp"

namespace scv {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n);
  ResidueRing f(p, 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (f(static_cast<std::int64_t>(g)).pow((p - 1) / q).value() == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::BadPrime, "no primitive root");
}

std::uint64_t mod_pm1(std::int64_t n, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p - 1);
  std::int64_t r = n % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace

Residue teichmuller(std::uint64_t x, const ResidueRing& ring) {
  Residue base = ring(static_cast<std::int64_t>(x % ring.p()));
  Residue r = base;
  for (unsigned i = 1; i < ring.k(); ++i) r = r.pow(ring.p());
  return r;
}

TeichmullerChar::TeichmullerChar(const ResidueRing& ring) : ring_(ring) {
  const std::uint64_t p = ring.p();
  omega_.resize(p);
  for (std::uint64_t x = 0; x < p; ++x) omega_[x] = teichmuller(x, ring).value();
  const std::uint64_t g = primitive_root(p);
  generator_powers_.resize(p - 1);
  log_.assign(p, 0);
  std::uint64_t x = 1;
  Residue wg = ring.from_canonical(omega_[g]);
  Residue acc = ring.one();
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    generator_powers_[i] = acc.value();
    log_[x] = static_cast<std::uint32_t>(i);
    acc *= wg;
    x = x * g % p;
  }
}

std::uint64_t TeichmullerChar::reduce(std::int64_t x) const {
  auto p = static_cast<std::int64_t>(ring_.p());
  std::int64_t r = x % p;
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

Residue TeichmullerChar::omega(std::int64_t x) const { return ring_.from_canonical(omega_[reduce(x)]); }

std::uint64_t TeichmullerChar::log(std::int64_t x) const {
  std::uint64_t r = reduce(x);
  if (r == 0) throw Error(ErrorKind::BadRange, "discrete log of zero");
  return log_[r];
}

Residue TeichmullerChar::value(std::int64_t n, std::int64_t x) const {
  std::uint64_t r = reduce(x);
  if (r == 0) return ring_.zero();
  const std::uint64_t order = ring_.p() - 1;
  // omega(x)^{-n} = omega(g)^{-n log x}
  std::uint64_t e = mod_pm1(n, ring_.p());
  e = (order - e) % order;
  e = static_cast<std::uint64_t>(static_cast<u128>(e) * log_[r] % order);
  return ring_.from_canonical(generator_powers_[e]);
}

Residue char_value(std::int64_t n, std::int64_t x, const TeichmullerChar& chars) { return chars.value(n, x); }

PiAdicElement::PiAdicElement(const ResidueRing& ring) : ring_(ring), coeffs_(ring.p() - 1, 0) {}

PiAdicElement PiAdicElement::scalar(const Residue& c) {
  PiAdicElement e(c.ring());
  e.coeffs_[0] = c.value();
  return e;
}

PiAdicElement PiAdicElement::monomial(const Residue& c, std::uint64_t degree) {
  const ResidueRing& ring = c.ring();
  const std::uint64_t n = ring.p() - 1;
  PiAdicElement e(ring);
  Residue coef = c * ring(-static_cast<std::int64_t>(ring.p())).pow(degree / n);
  e.coeffs_[degree % n] = coef.value();
  return e;
}

bool PiAdicElement::is_scalar() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Residue PiAdicElement::scalar_value() const {
  if (!is_scalar()) throw Error(ErrorKind::PiResidueNonScalar, "element has nonzero pi-coefficients");
  return coeff(0);
}

PiAdicElement PiAdicElement::operator+(const PiAdicElement& o) const {
  PiAdicElement r(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeff(i) + o.coeff(i)).value();
  return r;
}

PiAdicElement PiAdicElement::operator-(const PiAdicElement& o) const {
  PiAdicElement r(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeff(i) - o.coeff(i)).value();
  return r;
}

PiAdicElement PiAdicElement::operator*(const PiAdicElement& o) const {
  if (!(ring_ == o.ring_)) throw Error(ErrorKind::BadRange, "mismatched rings");
  const std::size_t n = coeffs_.size();
  const std::uint64_t m = ring_.modulus();
  // pi^{n+i} = -p pi^i
  const std::uint64_t minus_p = ring_(-static_cast<std::int64_t>(ring_.p())).value();
  std::vector<std::uint64_t> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      std::uint64_t t = mulmod(coeffs_[i], o.coeffs_[j], m);
      std::size_t d = i + j;
      auto& slot = d < n ? lo[d] : hi[d - n];
      slot = (slot + t) % m;
    }
  }
  PiAdicElement r(ring_);
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = (lo[i] + mulmod(hi[i], minus_p, m)) % m;
  return r;
}

PiAdicElement PiAdicElement::operator*(const Residue& s) const {
  PiAdicElement r(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = (coeff(i) * s).value();
  return r;
}

PiAdicElement GaussMonomial::to_pi_adic() const {
  if (degree < 0) throw Error(ErrorKind::NotPAdicInteger, "negative pi-degree");
  return PiAdicElement::monomial(coef, static_cast<std::uint64_t>(degree));
}

Residue GaussMonomial::scalar(int divide) const {
  const ResidueRing& ring = coef.ring();
  const auto n = static_cast<std::int64_t>(ring.p() - 1);
  if (coef.is_zero()) return ring.zero();
  if (degree % n != 0) throw Error(ErrorKind::PiResidueNonScalar, "pi-degree is not a multiple of p-1");
  const std::int64_t q = degree / n;
  if (q < divide) throw Error(ErrorKind::NotPAdicInteger, "p-power does not cover the divisor");
  Residue r = coef * ring(static_cast<std::int64_t>(ring.p())).pow(static_cast<std::uint64_t>(q - divide));
  return (q & 1) ? -r : r;
}

GaussSums::GaussSums(const GammaTable& gamma) : ring_(gamma.ring()) {
  const std::uint64_t p = ring_.p();
  const Residue inv = residue_inv(ring_(static_cast<std::int64_t>(p - 1)));
  sums_.reserve(p - 1);
  for (std::uint64_t j = 0; j + 1 < p; ++j) {
    Residue g = gamma[ring_(static_cast<std::int64_t>(j)) * inv];
    sums_.push_back({-g, static_cast<std::int64_t>(j)});
  }
}

const GaussMonomial& GaussSums::operator()(std::int64_t m) const { return sums_[mod_pm1(m, ring_.p())]; }

PiAdicElement gauss_sum(std::int64_t j, const GammaTable& gamma) {
  const auto p = static_cast<std::int64_t>(gamma.ring().p());
  if (j < 0 || j > p - 2) throw Error(ErrorKind::BadRange, "Gauss sum index must lie in [0, p-2]");
  const ResidueRing& ring = gamma.ring();
  Residue g = gamma[ring(j) * residue_inv(ring(p - 1))];
  return PiAdicElement::monomial(-g, static_cast<std::uint64_t>(j));
}

Residue jacobi_sum(std::span<const std::int64_t> exponents, const TeichmullerChar& chars) {
  const ResidueRing& ring = chars.ring();
  const std::uint64_t p = chars.p();
  const std::uint64_t m = ring.modulus();
  if (exponents.empty()) throw Error(ErrorKind::BadRange, "Jacobi sum of zero characters");
  auto table = [&](std::int64_t e) {
    std::vector<std::uint64_t> t(p);
    for (std::uint64_t x = 0; x < p; ++x) t[x] = chars.value(e, static_cast<std::int64_t>(x)).value();
    return t;
  };
  // f[s] = number-weighted sum over t_1 + ... + t_i = s
  std::vector<std::uint64_t> f = table(exponents[0]);
  const std::size_t r = exponents.size();
  for (std::size_t i = 1; i + 1 < r; ++i) {
    std::vector<std::uint64_t> chi = table(exponents[i]);
    std::vector<std::uint64_t> g(p, 0);
    for (std::uint64_t s = 0; s < p; ++s) {
      u128 acc = 0;
      for (std::uint64_t t = 1; t < p; ++t) {
        acc += static_cast<u128>(f[(s + p - t) % p]) * chi[t];
        if ((t & 63) == 0) acc %= m;
      }
      g[s] = static_cast<std::uint64_t>(acc % m);
    }
    f = std::move(g);
  }
  if (r == 1) return ring.from_canonical(f[1 % p]);
  std::vector<std::uint64_t> chi = table(exponents[r - 1]);
  u128 acc = 0;
  for (std::uint64_t t = 1; t < p; ++t) {
    acc += static_cast<u128>(f[(1 + p - t) % p]) * chi[t];
    if ((t & 63) == 0) acc %= m;
  }
  return ring.from_canonical(static_cast<std::uint64_t>(acc % m));
}

Residue jacobi_from_gauss(std::span<const std::int64_t> exponents, const GaussSums& gauss) {
  const std::uint64_t p = gauss.p();
  const ResidueRing& ring = gauss.ring();
  bool all_trivial = true;
  std::int64_t total = 0;
  GaussMonomial prod{ring.one(), 0};
  for (auto e : exponents) {
    if (mod_pm1(e, p) != 0) all_trivial = false;
    total += static_cast<std::int64_t>(mod_pm1(e, p));
    prod = prod * gauss(e);
  }
  if (all_trivial) throw Error(ErrorKind::BadRange, "Gauss-sum route needs a nontrivial character");
  if (mod_pm1(total, p) != 0) {
    GaussMonomial q = prod * gauss(total).inverse();
    return q.to_pi_adic().scalar_value();
  }
  return -prod.scalar(1);
}

Residue jacobi_by_reduction(std::span<const std::int64_t> exponents, const TeichmullerChar& chars) {
  const ResidueRing& ring = chars.ring();
  const std::uint64_t p = chars.p();
  const std::size_t k = exponents.size();
  if (k == 0) throw Error(ErrorKind::BadRange, "Jacobi sum of zero characters");
  if (k == 1) return ring.one();
  auto head = exponents.first(k - 1);
  const bool last_trivial = mod_pm1(exponents[k - 1], p) == 0;
  std::int64_t head_sum = 0;
  bool head_all_trivial = true;
  for (auto e : head) {
    head_sum += e;
    if (mod_pm1(e, p) != 0) head_all_trivial = false;
  }
  Residue rest = jacobi_by_reduction(head, chars);
  const auto pp = static_cast<std::int64_t>(p);
  if (mod_pm1(head_sum, p) != 0) {
    std::int64_t pair[2] = {head_sum, exponents[k - 1]};
    return jacobi_sum(pair, chars) * rest;
  }
  if (head_all_trivial) {
    Residue lead = ring(pp - 1).pow(k - 1);
    return last_trivial ? lead - rest : lead - rest * pp;
  }
  return last_trivial ? -rest : -(rest * pp);
}

}  // namespace scv
