#pragma once

#include <cstdint>

#include "scv/residue.hpp"

namespace scv::test {

inline Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Trial division, kept independent of the library's Miller-Rabin.
inline bool slow_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace scv::test
