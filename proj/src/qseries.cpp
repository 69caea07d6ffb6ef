#include "scv/qseries.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "scv/error.hpp"

namespace scv {

QSeries::QSeries(std::size_t precision) : coeffs_(precision, 0) {}

QSeries::QSeries(std::vector<BigInt> coeffs, std::size_t precision) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(precision, 0);
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(precision(), o.precision()));
  for (std::size_t i = 0; i < r.precision(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries r(std::min(precision(), o.precision()));
  for (std::size_t i = 0; i < r.precision(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  const std::size_t n = std::min(precision(), o.precision());
  QSeries r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

QSeries QSeries::operator*(long s) const {
  QSeries r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

QSeries QSeries::inverse() const {
  const std::size_t n = precision();
  if (n == 0) return *this;
  if (coeffs_[0] != 1 && coeffs_[0] != -1) throw Error(ErrorKind::NonUnit, "constant term must be +1 or -1");
  // Newton: g <- g (2 - f g), doubling the number of correct terms
  QSeries g(n);
  g.coeffs_[0] = coeffs_[0];
  std::size_t known = 1;
  while (known < n) {
    known = std::min(2 * known, n);
    QSeries f(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(known)), known);
    QSeries gk(std::vector<BigInt>(g.coeffs_.begin(), g.coeffs_.begin() + static_cast<std::ptrdiff_t>(known)), known);
    QSeries two(known);
    two.coeffs_[0] = 2;
    QSeries next = gk * (two - f * gk);
    for (std::size_t i = 0; i < known; ++i) g.coeffs_[i] = next.coeffs_[i];
  }
  return g;
}

QSeries QSeries::shifted(std::size_t e) const {
  QSeries r(precision());
  for (std::size_t i = 0; i + e < precision(); ++i) r.coeffs_[i + e] = coeffs_[i];
  return r;
}

std::int64_t EtaQuotientSpec::leading_power() const {
  std::int64_t total = 0;
  for (const auto& f : factors) total += static_cast<std::int64_t>(f.delta) * f.exponent;
  if (total % 24 != 0 || total < 0) {
    throw Error(ErrorKind::FractionalLeadingPower, "sum of delta*r must be a nonnegative multiple of 24");
  }
  return total / 24;
}

std::string EtaQuotientSpec::key() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += ',';
    s += std::to_string(f.delta) + '^' + std::to_string(f.exponent);
  }
  return s;
}

namespace {

// prod_{n>=1} (1 - q^{delta n}) by the pentagonal number theorem
QSeries euler_product(std::uint64_t delta, std::size_t precision) {
  QSeries r(precision);
  if (precision > 0) r[0] = 1;
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t e1 = k * (3 * k - 1) / 2 * delta;
    const std::uint64_t e2 = k * (3 * k + 1) / 2 * delta;
    if (e1 >= precision) break;
    const long sign = (k & 1) ? -1 : 1;
    r[e1] = sign;
    if (e2 < precision) r[e2] = sign;
  }
  return r;
}

QSeries power(const QSeries& base, std::uint64_t e) {
  QSeries r(base.precision());
  if (r.precision() > 0) r[0] = 1;
  QSeries b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

}  // namespace

QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t precision) {
  const auto lead = static_cast<std::size_t>(spec.leading_power());
  QSeries r(precision);
  if (lead >= precision) return r;
  const std::size_t body = precision - lead;
  QSeries prod(body);
  prod[0] = 1;
  for (const auto& f : spec.factors) {
    if (f.delta == 0) throw Error(ErrorKind::BadRange, "eta scale must be positive");
    if (f.exponent == 0) continue;
    QSeries e = euler_product(f.delta, body);
    if (f.exponent < 0) e = e.inverse();
    prod = prod * power(e, static_cast<std::uint64_t>(f.exponent < 0 ? -f.exponent : f.exponent));
  }
  for (std::size_t i = 0; i < body; ++i) r[i + lead] = prod[i];
  return r;
}

EtaCache::EtaCache(std::filesystem::path file) : file_(std::move(file)) {}

std::filesystem::path EtaCache::default_file() {
  const char* dir = std::getenv("SCV_CACHE_DIR");
  std::filesystem::path base = dir && *dir ? std::filesystem::path(dir) : std::filesystem::path(".scv-cache");
  return base / "eta.txt";
}

EtaCache& EtaCache::global() {
  static EtaCache cache(default_file());
  return cache;
}

void EtaCache::load() {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    std::size_t n = 0;
    if (!(ls >> key >> n)) continue;
    std::vector<BigInt> coeffs;
    coeffs.reserve(n);
    std::string tok;
    while (coeffs.size() < n && ls >> tok) {
      BigInt c;
      if (c.set_str(tok, 10) != 0) break;
      coeffs.push_back(std::move(c));
    }
    if (coeffs.size() != n) continue;
    auto it = entries_.find(key);
    if (it == entries_.end() || it->second.precision() < n) entries_.insert_or_assign(key, QSeries(std::move(coeffs), n));
  }
  loaded_ = true;
}

QSeries EtaCache::get(const EtaQuotientSpec& spec, std::size_t precision) {
  const std::string key = spec.key();
  {
    std::unique_lock lock(mutex_);
    if (!loaded_) load();
  }
  {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end() && it->second.precision() >= precision) {
      const auto& c = it->second.coeffs();
      return QSeries(std::vector<BigInt>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(precision)), precision);
    }
  }
  QSeries fresh = eta_quotient(spec, precision);
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it != entries_.end() && it->second.precision() >= precision) return fresh;
  entries_.insert_or_assign(key, fresh);
  std::error_code ec;
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path(), ec);
  std::ofstream out(file_, std::ios::app);
  if (out) {
    out << key << ' ' << precision;
    for (const auto& c : fresh.coeffs()) out << ' ' << c.get_str();
    out << '\n';
  }
  return fresh;
}

QSeries modular_form(ModularForm form, std::size_t precision, EtaCache* cache) {
  auto eta = [&](std::vector<EtaFactor> factors) {
    EtaQuotientSpec spec{std::move(factors)};
    return cache ? cache->get(spec, precision) : eta_quotient(spec, precision);
  };
  switch (form) {
    case ModularForm::Gamma:
      return eta({{2, 4}, {4, 4}});
    case ModularForm::A:
      return eta({{4, 6}});
    case ModularForm::C: {
      QSeries f1 = eta({{1, 4}, {5, 4}});
      QSeries f2 = eta({{1, 3}, {5, 4}, {25, 1}});
      QSeries f3 = eta({{1, 2}, {5, 4}, {25, 2}});
      QSeries f4 = eta({{1, 1}, {5, 4}, {25, 3}});
      QSeries f5 = eta({{5, 4}, {25, 4}});
      return f1 + f2 * 5 + f3 * 20 + f4 * 25 + f5 * 25;
    }
  }
  throw Error(ErrorKind::BadRange, "unknown modular form");
}

BigInt newform_coeff(ModularForm form, std::uint64_t n, std::size_t precision, EtaCache* cache) {
  if (n >= precision) throw Error(ErrorKind::PrecisionTooLow, "q^" + std::to_string(n) + " is beyond the expansion");
  return modular_form(form, precision, cache)[n];
}

}  // namespace scv
