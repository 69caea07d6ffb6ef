#include "scv/hypergeometric.hpp"

#include <algorithm>
#include <numeric>

#include "scv/error.hpp"

namespace scv {

namespace {

struct Factor {
  int v = 0;
  BigInt num_unit, den_unit;
};

// p^v * num_unit / den_unit with both units prime to p
Factor split(const Rational& x, std::uint64_t p) {
  Factor f;
  f.num_unit = x.get_num();
  f.den_unit = x.get_den();
  while (mpz_divisible_ui_p(f.num_unit.get_mpz_t(), p)) {
    mpz_divexact_ui(f.num_unit.get_mpz_t(), f.num_unit.get_mpz_t(), p);
    ++f.v;
  }
  while (mpz_divisible_ui_p(f.den_unit.get_mpz_t(), p)) {
    mpz_divexact_ui(f.den_unit.get_mpz_t(), f.den_unit.get_mpz_t(), p);
    --f.v;
  }
  return f;
}

}  // namespace

Residue trunc_hyp(const HypParams& params, const ResidueRing& ring) {
  const std::uint64_t p = ring.p();
  for (const auto& b : params.lower) {
    if (b <= 0 && b.get_den() == 1) throw Error(ErrorKind::BadRange, "lower parameter is zero or a negative integer");
  }
  if (params.z == 0) return ring.one();

  // Ratio t_{n+1}/t_n as a list of rational factors; a zero factor ends the series.
  auto ratio = [&](std::uint64_t n) {
    std::vector<Rational> fs;
    const Rational rn(static_cast<unsigned long>(n));
    for (const auto& a : params.upper) fs.push_back(a + rn);
    for (const auto& b : params.lower) fs.push_back(1 / (b + rn));
    fs.push_back(params.z / Rational(static_cast<unsigned long>(n + 1)));
    for (auto& f : fs) f.canonicalize();
    return fs;
  };

  // pass 1: term valuations
  std::vector<int> vals{0};
  std::vector<std::vector<Factor>> steps;
  std::uint64_t last = params.m;
  for (std::uint64_t n = 0; n < params.m; ++n) {
    auto fs = ratio(n);
    if (std::any_of(fs.begin(), fs.end(), [](const Rational& f) { return f == 0; })) {
      last = n;
      break;
    }
    std::vector<Factor> split_fs;
    int v = vals.back();
    for (const auto& f : fs) {
      split_fs.push_back(split(f, p));
      v += split_fs.back().v;
    }
    vals.push_back(v);
    steps.push_back(std::move(split_fs));
  }
  const int vmin = *std::min_element(vals.begin(), vals.end());
  const unsigned shift = vmin < 0 ? static_cast<unsigned>(-vmin) : 0;

  // pass 2: sum p^{v_n + shift} u_n mod p^{k + shift}
  ResidueRing work(p, ring.k() + shift);
  Residue unit = work.one();
  Residue sum = work.zero();
  Residue pp = work(static_cast<std::int64_t>(p));
  auto add_term = [&](int v) {
    const int e = v + static_cast<int>(shift);
    if (e < static_cast<int>(work.k())) sum += unit * pp.pow(static_cast<std::uint64_t>(e));
  };
  add_term(vals[0]);
  for (std::uint64_t n = 0; n < last; ++n) {
    for (const auto& f : steps[n]) unit *= work.from(f.num_unit) * residue_inv(work.from(f.den_unit));
    add_term(vals[n + 1]);
  }
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < shift; ++i) scale *= p;
  if (sum.value() % scale != 0) throw Error(ErrorKind::NotPAdicInteger, "truncated series is not p-integral");
  return ring.from_canonical(sum.value() / scale % ring.modulus());
}

BigInt apery(std::uint64_t n, AperyKind kind) {
  BigInt total = 0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    BigInt a, b;
    mpz_bin_uiui(a.get_mpz_t(), n + j, j);
    mpz_bin_uiui(b.get_mpz_t(), n, j);
    BigInt term = a * b * b;
    if (kind == AperyKind::A) term *= a;
    total += term;
  }
  return total;
}

Residue g_function(std::span<const Rational> fractions, const GammaTable& gamma) {
  const ResidueRing& ring = gamma.ring();
  const std::uint64_t p = ring.p();
  const auto pm1 = static_cast<std::int64_t>(p - 1);
  std::vector<Rational> x(fractions.begin(), fractions.end());
  std::sort(x.begin(), x.end());
  for (const auto& xi : x) {
    if (xi <= 0 || xi >= 1) throw Error(ErrorKind::BadRange, "G-function arguments must lie in (0, 1)");
    if (mod_u64(xi.get_den(), p) == 0) throw Error(ErrorKind::NotPAdicInteger, "denominator divisible by p");
  }
  const std::size_t N = x.size();

  // bounds[k'] = floor(x_{k'} (p-1)) with x_0 (p-1) = -1 and x_{N+1} (p-1) = p-2
  std::vector<std::int64_t> bounds(N + 2);
  bounds[0] = -1;
  bounds[N + 1] = pm1 - 1;
  for (std::size_t i = 0; i < N; ++i) {
    BigInt f;
    BigInt num = x[i].get_num() * pm1;
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), x[i].get_den().get_mpz_t());
    bounds[i + 1] = f.get_si();
  }

  std::vector<Residue> xr, inv_gx;
  for (const auto& xi : x) {
    xr.push_back(reduce_rational(xi, ring));
    inv_gx.push_back(residue_inv(gamma[xr.back()]));
  }
  const Residue inv_pm1 = residue_inv(ring(pm1));
  const Residue one = ring.one();
  const Residue minus_p = ring(-static_cast<std::int64_t>(p));

  Residue total = ring.zero();
  Residue weight = one;
  for (std::size_t kk = 0; kk <= N + 1 && kk < ring.k(); ++kk) {
    Residue inner = ring.zero();
    for (std::int64_t j = bounds[kk] + 1; j <= bounds[kk + 1]; ++j) {
      const Residue jr = ring(j) * inv_pm1;
      Residue term = gamma[jr].pow(N);
      if ((j * static_cast<std::int64_t>(N)) & 1) term = -term;
      for (std::size_t i = 0; i < N; ++i) {
        // i is zero-based, so "i > k'" in one-based terms is i >= kk
        Residue arg = i >= kk ? xr[i] - jr : xr[i] + one - jr;
        term *= gamma[arg] * inv_gx[i];
      }
      inner += term;
    }
    total += weight * inner;
    weight *= minus_p;
  }
  return -(total * inv_pm1);
}

int ScaledResidue::precision() const {
  return static_cast<int>(mantissa_.ring().k()) - std::max(scale_, 0);
}

ScaledResidue ScaledResidue::operator*(const ScaledResidue& o) const {
  if (!(mantissa_.ring() == o.mantissa_.ring())) throw Error(ErrorKind::BadRange, "mismatched rings");
  return {mantissa_ * o.mantissa_, scale_ + o.scale_};
}

Residue ScaledResidue::to_residue(unsigned digits) const {
  const ResidueRing& ring = mantissa_.ring();
  if (static_cast<int>(digits) > precision()) {
    throw Error(ErrorKind::PrecisionTooLow, "only " + std::to_string(precision()) + " p-adic digits are known");
  }
  ResidueRing target = ring.with_power(digits);
  std::uint64_t v = mantissa_.value();
  if (scale_ > 0) {
    std::uint64_t div = 1;
    for (int i = 0; i < scale_; ++i) div *= ring.p();
    if (v % div != 0) throw Error(ErrorKind::NotPAdicInteger, "value has a pole at p");
    return target.from_canonical(v / div % target.modulus());
  }
  Residue r = target.from_canonical(v % target.modulus());
  return r * target(static_cast<std::int64_t>(ring.p())).pow(static_cast<std::uint64_t>(-scale_));
}

ScaledResidue greene_binomial(std::int64_t a, std::int64_t b, const TeichmullerChar& chars) {
  std::int64_t e[2] = {a, -b};
  Residue j = jacobi_sum(e, chars);
  // B(-1) = omega(-1)^{-b} = (-1)^b
  if (b & 1) j = -j;
  return {j, 1};
}

ScaledResidue gaussian_hgs(std::span<const std::pair<std::uint64_t, std::uint64_t>> fractions,
                           const TeichmullerChar& chars) {
  const ResidueRing& ring = chars.ring();
  const std::uint64_t p = chars.p();
  std::vector<std::int64_t> a;
  for (auto [m, d] : fractions) {
    if (d == 0 || (p - 1) % d != 0) throw Error(ErrorKind::BadPrime, "Gaussian series needs p = 1 mod d");
    a.push_back(static_cast<std::int64_t>(m * ((p - 1) / d)));
  }
  const auto n1 = static_cast<int>(a.size());
  // p/(p-1) sum_c prod_i (T^{a_i+c} over T^c); each binomial carries 1/p
  Residue sum = ring.zero();
  for (std::int64_t c = 0; c + 1 < static_cast<std::int64_t>(p); ++c) {
    Residue prod = ring.one();
    for (auto ai : a) prod *= greene_binomial(ai + c, c, chars).mantissa();
    sum += prod;
  }
  Residue mant = sum * residue_inv(ring(static_cast<std::int64_t>(p - 1)));
  return {mant, n1 - 1};
}

Residue gamma_product(std::span<const Rational> args, const GammaTable& gamma) {
  Residue r = gamma.ring().one();
  for (const auto& x : args) r *= gamma_at(x, gamma);
  return r;
}

}  // namespace scv
