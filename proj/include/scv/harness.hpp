#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scv/qseries.hpp"
#include "scv/residue.hpp"

namespace scv {

enum class Status { Pass, Fail, Skip };

std::string_view to_string(Status s);

struct Record {
  /// The prime, or the parameter index for identity cases.
  std::uint64_t p = 0;
  std::string lhs;
  std::string rhs;
  /// 0 means the two sides are compared exactly.
  std::uint64_t modulus = 0;
  Status status = Status::Skip;
  std::string reason;
};

struct Summary {
  std::size_t pass = 0, fail = 0, skip = 0;
};

struct Report {
  std::string case_name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Record> records;
  std::int64_t elapsed_ms = 0;

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

struct RunOptions {
  /// 0 selects the case's default exponent.
  unsigned mod_power = 0;
  unsigned threads = 1;
  std::uint64_t gamma_cap = 250;
  std::uint64_t enum_cap = 31;
  bool timing = true;
  /// nullptr expands eta products afresh for every run.
  EtaCache* cache = nullptr;
};

struct CaseSpec {
  std::string name;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  RunOptions options;
};

/// Inclusive "lo..hi", or a single number.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

struct CaseInfo {
  std::string name;
  std::string statement;
  /// Identity cases sweep a parameter index instead of primes.
  bool index_sweep = false;
  unsigned default_k = 0;
  /// Suggested sweep for the full acceptance run.
  std::uint64_t lo = 0, hi = 0;
};

std::vector<CaseInfo> list_cases();
std::optional<CaseInfo> find_case(const std::string& name);

/// Runs one case. UnknownCase for an unregistered name, BadRange for an
/// exponent the case cannot use.
Report run_case(const CaseSpec& spec);

/// Runs several cases with (case, prime) tasks sharing one worker pool.
std::vector<Report> run_cases(const std::vector<CaseSpec>& specs, unsigned threads);

/// The t in {1,2,3,4} with 2F1[1/d,1-1/d;1|1]_{p-1} = (-t/p) mod p^2 for every
/// calibration prime. t = 1 and t = 4 give the same symbol, so candidates are
/// compared by square class and the smallest representative is returned.
/// An empty prime list selects the first ten primes above max(d, 4).
int calibrate_d1_twist(std::uint64_t d, std::vector<std::uint64_t> primes = {});

enum class ReportFormat { Json, Csv };

void emit_report(const Report& report, ReportFormat format, std::ostream& out);
/// Writes to `path`; IoFailure if the file cannot be written.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

}  // namespace scv
