#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "scv/residue.hpp"

namespace scv {

/// Integer power series in q known up to (not including) q^N.
class QSeries {
 public:
  explicit QSeries(std::size_t precision);
  QSeries(std::vector<BigInt> coeffs, std::size_t precision);

  std::size_t precision() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  BigInt& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(long s) const;
  /// Multiplicative inverse; needs constant term +1 or -1.
  QSeries inverse() const;
  /// q^e * this, precision unchanged.
  QSeries shifted(std::size_t e) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct EtaFactor {
  std::uint64_t delta;
  std::int64_t exponent;
};

/// prod eta(delta z)^r. The q-power sum delta r / 24 must be a nonnegative integer.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  std::int64_t leading_power() const;
  /// "delta^exponent,..." as used in the cache file.
  std::string key() const;
};

QSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t precision);

/// On-disk memo of eta expansions, one record per line:
///   delta^exponent[,delta^exponent...] N c0 c1 ... c_{N-1}
/// Lookups take a shared lock; inserts take the unique lock and append.
class EtaCache {
 public:
  explicit EtaCache(std::filesystem::path file);
  /// Location from SCV_CACHE_DIR, else ./.scv-cache.
  static std::filesystem::path default_file();
  static EtaCache& global();

  QSeries get(const EtaQuotientSpec& spec, std::size_t precision);
  const std::filesystem::path& file() const { return file_; }

 private:
  void load();

  std::filesystem::path file_;
  std::shared_mutex mutex_;
  bool loaded_ = false;
  std::map<std::string, QSeries> entries_;
};

enum class ModularForm { Gamma, A, C };

/// eta^4(2z) eta^4(4z), eta^6(4z), and f_1 + 5f_2 + 20f_3 + 25f_4 + 25f_5
/// built from eta(z), eta(5z), eta(25z). Expansions go through `cache` when given.
QSeries modular_form(ModularForm form, std::size_t precision, EtaCache* cache = nullptr);

/// Coefficient of q^n; precision must exceed n.
BigInt newform_coeff(ModularForm form, std::uint64_t n, std::size_t precision, EtaCache* cache = nullptr);

}  // namespace scv
