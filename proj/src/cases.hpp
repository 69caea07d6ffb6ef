#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scv/harness.hpp"
#include "scv/padic_gamma.hpp"
#include "scv/qseries.hpp"
#include "scv/residue.hpp"

namespace scv::detail {

enum Needs : unsigned {
  kNeedNone = 0,
  kNeedGammaForm = 1,
  kNeedAForm = 2,
  kNeedCForm = 4,
  kNeedTwist = 8,
};

struct CaseData {
  std::optional<QSeries> gamma_form, a_form, c_form;
  int twist = 0;
};

struct Context {
  std::uint64_t p;  // prime, or the index for index sweeps
  unsigned k;
  const RunOptions& options;
  const CaseData& data;
};

using CheckFn = std::function<Record(const Context&)>;

struct CaseDef {
  CaseInfo info;
  unsigned min_k = 1;
  unsigned max_k = 3;
  unsigned needs = kNeedNone;
  std::uint64_t twist_d = 0;
  CheckFn check;
};

void add_main_cases(std::vector<CaseDef>& out);
void add_property_cases(std::vector<CaseDef>& out);
void add_identity_cases(std::vector<CaseDef>& out);

const std::vector<CaseDef>& registry();

Record compare(std::uint64_t p, const Residue& lhs, const Residue& rhs);
Record compare_exact(std::uint64_t p, const BigInt& lhs, const BigInt& rhs);
Record skip(std::uint64_t p, std::string reason);

/// Counts sub-checks for cases that verify many instances per prime; the
/// record carries (checks run, checks held) and the first failure.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe);
  void check(bool ok, const std::string& what) {
    check(ok, [&] { return what; });
  }
  Record record(std::uint64_t p, std::uint64_t modulus) const;
  std::size_t run() const { return run_; }

 private:
  std::size_t run_ = 0;
  std::size_t held_ = 0;
  std::string first_failure_;
};

/// a/b in lowest terms.
Rational frac(std::int64_t a, std::int64_t b);

/// Skip record when a k >= 3 table would exceed the configured cap.
std::optional<Record> gamma_cap_guard(const Context& ctx, unsigned k);

std::string residue_str(const Residue& r);

}  // namespace scv::detail
