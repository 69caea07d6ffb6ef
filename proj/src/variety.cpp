#include "scv/variety.hpp"

#include <stdexcept>
#include <thread>

#include "scv/error.hpp"

namespace scv {

namespace {

// #{y in F_p^r : 1 + y_1^5 + ... + y_r^5 = 0}
std::uint64_t diagonal_count(std::uint64_t p, unsigned r, const std::vector<std::uint64_t>& fifth) {
  std::vector<std::uint64_t> dist(p, 0);
  dist[1 % p] = 1;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<std::uint64_t> next(p, 0);
    for (std::uint64_t s = 0; s < p; ++s) {
      if (dist[s] == 0) continue;
      for (std::uint64_t y = 0; y < p; ++y) next[(s + fifth[y]) % p] += dist[s];
    }
    dist = std::move(next);
  }
  return dist[0];
}

}  // namespace

CountResult count_quintic(std::uint64_t p, std::uint64_t enum_cap, unsigned threads) {
  if (p == 5) throw Error(ErrorKind::BadPrime, "the quintic family is singular at p = 5");
  ResidueRing check(p, 1);  // rejects composites
  if (p > enum_cap) {
    throw Error(ErrorKind::CapacityExceeded, "p = " + std::to_string(p) + " exceeds the enumeration cap " +
                                                 std::to_string(enum_cap));
  }
  std::vector<std::uint64_t> fifth(p), roots(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) {
    fifth[x] = x * x % p * x % p * x % p * x % p;
    ++roots[fifth[x]];
  }

  // chart x0 = 1: solve x4^5 - c x4 + s = 0 for each (x1, x2, x3)
  auto chart0_slice = [&](std::uint64_t x1) {
    std::uint64_t count = 0;
    for (std::uint64_t x2 = 0; x2 < p; ++x2) {
      for (std::uint64_t x3 = 0; x3 < p; ++x3) {
        const std::uint64_t s = (1 + fifth[x1] + fifth[x2] + fifth[x3]) % p;
        const std::uint64_t c = 5 * x1 % p * x2 % p * x3 % p;
        if (c == 0) {
          count += roots[(p - s) % p];
          continue;
        }
        for (std::uint64_t x4 = 0; x4 < p; ++x4) {
          if ((fifth[x4] + s + p * p - c * x4) % p == 0) ++count;
        }
      }
    }
    return count;
  };

  if (threads == 0) threads = 1;
  std::vector<std::uint64_t> partial(p, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t x1 = t; x1 < p; x1 += threads) partial[x1] = chart0_slice(x1);
      });
    }
  }
  std::uint64_t chart0 = 0;
  for (auto v : partial) chart0 += v;

  CountResult result{p, 0, {}};
  result.charts.push_back(to_bigint(chart0));
  for (unsigned r = 3; r >= 1; --r) result.charts.push_back(to_bigint(diagonal_count(p, r, fifth)));
  result.charts.push_back(0);  // x0 = ... = x3 = 0, x4 = 1 is not on the variety
  for (const auto& c : result.charts) result.points += c;
  return result;
}

int quintic_sign(std::uint64_t p) {
  const std::uint64_t r = p % 5;
  if (r == 0) throw Error(ErrorKind::BadPrime, "s(p) is undefined at p = 5");
  return (r == 1 || r == 4) ? 1 : -1;
}

BigInt c_from_points(std::uint64_t p, const BigInt& points) {
  const BigInt P = to_bigint(p);
  switch (p % 5) {
    case 1:
      return P * P * P + 25 * P * P - 100 * P + 1 - points;
    case 4:
      return P * P * P + P * P + 1 - points;
    case 2:
    case 3:
      return P * P * P + P * P + 2 * P + 1 - points;
    default:
      throw Error(ErrorKind::BadPrime, "no point-count formula at p = 5");
  }
}

CharSums char_sum_abcd(std::uint64_t p, const GammaTable* gamma) {
  if (p == 5) throw Error(ErrorKind::BadPrime, "the quintic family is singular at p = 5");
  if (p == 2) {
    ResidueRing ring(2, 3);
    return {ring(1), ring(-1), ring(1), ring(1)};
  }
  if (!gamma || gamma->ring().p() != p) throw Error(ErrorKind::BadRange, "need a Gamma_p table for this prime");
  const ResidueRing& ring = gamma->ring();
  GaussSums G(*gamma);
  TeichmullerChar chars(ring);
  const auto n = static_cast<std::int64_t>(p - 1);
  const Residue inv_n = residue_inv(ring(n));

  auto d_term = [&](std::int64_t e, std::int64_t shift_sum, std::int64_t si, std::int64_t sj, std::int64_t sk) {
    GaussMonomial m = G(-e + shift_sum) * G(-e - si) * G(-e - sj) * G(-e - sk) * G(-e) * G(5 * e);
    return m.scalar() * chars.value(-5 * e, -5);
  };

  if (p % 5 != 1) {
    Residue d = ring.zero();
    for (std::int64_t e = 0; e < n; ++e) d += d_term(e, 0, 0, 0, 0);
    return {ring(1), ring(-1), ring(1), d * inv_n};
  }

  const std::int64_t t = n / 5;
  Residue a = ring.zero(), a_star = ring.zero(), b = ring.zero(), c = ring.zero(), d = ring.zero();
  for (std::int64_t i = 0; i < 5; ++i) {
    Residue v = (G(i * t) * G(-i * t)).scalar();
    a += v;
    if (i > 0) a_star += v;
  }
  if (!(a_star == ring(4 * static_cast<std::int64_t>(p)))) {
    throw std::logic_error("sum_{i=1}^{4} G_{it} G_{-it} differs from 4p");
  }
  for (std::int64_t i = 0; i < 5; ++i) {
    for (std::int64_t j = 0; j < 5; ++j) {
      b += (G((i + j) * t) * G(-i * t) * G(-j * t)).scalar();
      for (std::int64_t k = 0; k < 5; ++k) c += (G((i + j + k) * t) * G(-i * t) * G(-j * t) * G(-k * t)).scalar();
    }
  }
  for (std::int64_t e = 0; e < n; ++e) {
    for (std::int64_t i = 0; i < 5; ++i) {
      for (std::int64_t j = 0; j < 5; ++j) {
        for (std::int64_t k = 0; k < 5; ++k) d += d_term(e, (i + j + k) * t, i * t, j * t, k * t);
      }
    }
  }
  return {a, b, c, d * inv_n};
}

Residue point_count_from_sums(const CharSums& s) {
  const ResidueRing& ring = s.a.ring();
  const auto p = static_cast<std::int64_t>(ring.p());
  Residue P = ring(p);
  Residue base = P.pow(4) + P.pow(3) + P.pow(2) + P - ring(4);
  return base + s.a * 10 + s.b * 10 + s.c * 5 + s.d;
}

BigInt theorem51_check(const GammaTable& gamma) {
  const ResidueRing& ring = gamma.ring();
  const std::uint64_t p = ring.p();
  if (ring.k() < 3) throw Error(ErrorKind::PrecisionTooLow, "the lift needs a mod p^3 table");
  if (p < 7) throw Error(ErrorKind::BadPrime, "needs p >= 7");
  GaussSums G(gamma);
  TeichmullerChar chars(ring);
  const auto n = static_cast<std::int64_t>(p - 1);
  Residue sum = ring.zero();
  for (std::int64_t j = 1; j < n; ++j) {
    GaussMonomial m = G(-j) * G(-j) * G(-j) * G(-j) * G(-j) * G(5 * j);
    sum += m.scalar(1) * chars.value(-5 * j, -5);
  }
  Residue value = -((ring.one() + sum) * residue_inv(ring(n)));
  value -= ring(quintic_sign(p) * static_cast<std::int64_t>(p));
  return balanced_lift(value);
}

}  // namespace scv
