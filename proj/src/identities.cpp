#include "scv/identities.hpp"

#include "scv/error.hpp"
#include "scv/padic_gamma.hpp"

namespace scv {

namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

BigInt binom(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational H(std::uint64_t n, unsigned order = 1) { return harmonic(n, order).value; }

Rational rising(const Rational& a, std::uint64_t n) { return pochhammer(a, n); }

// C(m+k,k) C(m,k) C(n+k,k) C(n,k)
Rational four_binom(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  return Rational(binom(m + k, k) * binom(m, k) * binom(n + k, k) * binom(n, k));
}

// (-1)^{k-n} C(m+k,k) C(m,k) C(n+k,k) / C(k-1,n)
Rational tail_coeff(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  Rational r(binom(m + k, k) * binom(m, k) * binom(n + k, k), binom(k - 1, n));
  r.canonicalize();
  return ((k - n) & 1) ? Rational(-r) : r;
}

Rational harmonic_bracket(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  return 1 + q(static_cast<std::int64_t>(k)) * (H(m + k) + H(m - k) + H(n + k) + H(n - k) - 4 * H(k));
}

// C1 (H^{(i)}_{k+n} - H^{(i)}_{k+P-n-1}) + C2 (H^{(i)}_{k+m} - H^{(i)}_{k+P-m-1})
Rational weight(std::uint64_t P, std::uint64_t m, std::uint64_t n, const Rational& c1, const Rational& c2,
                std::uint64_t k, unsigned order) {
  return c1 * (H(k + n, order) - H(k + P - n - 1, order)) + c2 * (H(k + m, order) - H(k + P - m - 1, order));
}

Rational base_lhs(std::uint64_t m, std::uint64_t n, const Rational& x) {
  Rational r = x * rising(1 - x, n) * rising(1 - x, m) / (rising(x, n + 1) * rising(x, m + 1));
  r.canonicalize();
  return r;
}

void check_pole(const Rational& x, std::uint64_t m) {
  if (x.get_den() == 1 && x <= 0 && x >= -q(static_cast<std::int64_t>(m))) {
    throw Error(ErrorKind::PoleSample, "sample " + to_string(x) + " is a pole");
  }
}

void check_theorem2(std::uint64_t P, std::uint64_t m, std::uint64_t n) {
  if (!(P >= m && m >= n && 2 * n >= P && n >= 1)) {
    throw Error(ErrorKind::HypothesisViolated, "need P >= m >= n >= P/2");
  }
  if (m == P) throw Error(ErrorKind::HypothesisViolated, "m = P makes H_{P-m-1} undefined");
}

}  // namespace

IdentityCheck identity_corollary1(std::uint64_t m, std::uint64_t n) {
  if (!(1 <= n && n <= m)) throw Error(ErrorKind::HypothesisViolated, "need 1 <= n <= m");
  Rational rhs = 0;
  for (std::uint64_t k = 0; k <= n; ++k) rhs += four_binom(m, n, k) * harmonic_bracket(m, n, k);
  for (std::uint64_t k = n + 1; k <= m; ++k) rhs += tail_coeff(m, n, k);
  rhs.canonicalize();
  return {((m + n) & 1) ? Rational(-1) : Rational(1), rhs};
}

std::vector<IdentityCheck> identity_theorem1(std::uint64_t m, std::uint64_t n, std::span<const Rational> samples) {
  if (!(1 <= n && n <= m)) throw Error(ErrorKind::HypothesisViolated, "need 1 <= n <= m");
  std::vector<IdentityCheck> out;
  for (const auto& x : samples) {
    check_pole(x, m);
    Rational rhs = 1 / x;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Rational xk = x + q(static_cast<std::int64_t>(k));
      rhs += four_binom(m, n, k) * (-q(static_cast<std::int64_t>(k)) / (xk * xk) + harmonic_bracket(m, n, k) / xk);
    }
    for (std::uint64_t k = n + 1; k <= m; ++k) rhs += tail_coeff(m, n, k) / (x + q(static_cast<std::int64_t>(k)));
    rhs.canonicalize();
    out.push_back({base_lhs(m, n, x), rhs});
  }
  return out;
}

std::vector<IdentityCheck> identity_theorem2(std::uint64_t P, std::uint64_t m, std::uint64_t n, const Rational& c1,
                                             const Rational& c2, std::span<const Rational> samples) {
  check_theorem2(P, m, n);
  std::vector<IdentityCheck> out;
  for (const auto& x : samples) {
    check_pole(x, m);
    if (x.get_den() == 1 && x >= q(static_cast<std::int64_t>(P - m)) && x <= q(static_cast<std::int64_t>(m))) {
      throw Error(ErrorKind::PoleSample, "sample " + to_string(x) + " hits a removable singularity");
    }
    Rational bracket = 0;
    for (std::uint64_t s = P - n; s <= n; ++s) bracket += c1 / (q(static_cast<std::int64_t>(s)) - x);
    for (std::uint64_t s = P - m; s <= m; ++s) bracket += c2 / (q(static_cast<std::int64_t>(s)) - x);
    Rational lhs = base_lhs(m, n, x) * bracket;
    lhs.canonicalize();

    Rational rhs = weight(P, m, n, c1, c2, 0, 1) / x;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Rational xk = x + q(static_cast<std::int64_t>(k));
      const Rational w1 = weight(P, m, n, c1, c2, k, 1);
      const Rational w2 = weight(P, m, n, c1, c2, k, 2);
      const Rational kk = q(static_cast<std::int64_t>(k));
      rhs += four_binom(m, n, k) * (-kk * w1 / (xk * xk) + (harmonic_bracket(m, n, k) * w1 - kk * w2) / xk);
    }
    for (std::uint64_t k = n + 1; k <= m; ++k) {
      rhs += tail_coeff(m, n, k) * weight(P, m, n, c1, c2, k, 1) / (x + q(static_cast<std::int64_t>(k)));
    }
    rhs.canonicalize();
    out.push_back({lhs, rhs});
  }
  return out;
}

IdentityCheck identity_corollary2(std::uint64_t P, std::uint64_t m, std::uint64_t n, const Rational& c1,
                                  const Rational& c2) {
  check_theorem2(P, m, n);
  Rational rhs = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    rhs += four_binom(m, n, k) * (harmonic_bracket(m, n, k) * weight(P, m, n, c1, c2, k, 1) -
                                  q(static_cast<std::int64_t>(k)) * weight(P, m, n, c1, c2, k, 2));
  }
  for (std::uint64_t k = n + 1; k <= m; ++k) rhs += tail_coeff(m, n, k) * weight(P, m, n, c1, c2, k, 1);
  rhs.canonicalize();
  return {Rational(0), rhs};
}

std::uint64_t identity_degree(std::uint64_t m, std::uint64_t n, std::uint64_t P) {
  std::uint64_t deg = 1 + n + m;
  if (P != 0 && P <= 2 * m) deg += 2 * m + 1 - P;
  return deg;
}

std::vector<Rational> sample_points(std::size_t count, const std::function<bool(const Rational&)>& keep) {
  std::vector<Rational> out;
  Rational x = 1;
  while (out.size() < count) {
    for (const Rational& c : {x, Rational(-x)}) {
      if (out.size() < count && keep(c)) out.push_back(c);
    }
    // Calkin-Wilf successor: 1 / (2 floor(x) - x + 1)
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    x = 1 / (2 * Rational(fl) - x + 1);
    x.canonicalize();
  }
  return out;
}

}  // namespace scv
