#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scv {

enum class ErrorKind {
  NonUnit,
  NotPAdicInteger,
  CapacityExceeded,
  PrecisionTooLow,
  BadRange,
  BadPrime,
  PiResidueNonScalar,
  HypothesisViolated,
  PoleSample,
  FractionalLeadingPower,
  UnknownCase,
  NoConsistentTwist,
  AmbiguousTwist,
  IoFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the contract violation, not the text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NotPAdicInteger: return "NotPAdicInteger";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::PiResidueNonScalar: return "PiResidueNonScalar";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::PoleSample: return "PoleSample";
    case ErrorKind::FractionalLeadingPower: return "FractionalLeadingPower";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::NoConsistentTwist: return "NoConsistentTwist";
    case ErrorKind::AmbiguousTwist: return "AmbiguousTwist";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace scv
