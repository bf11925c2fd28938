#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sharkovsky {

enum class ErrorKind {
  kInvalidArgument,
  kNotBijection,
  kNotSingleCycle,
  kPrecondition,
  kDomainViolation,
  kDomainEscape,
  kEmptyPreimage,
  kCoverageViolation,
  kBisectionFailure,
  kNotPeriodic,
  kNotACycle,
  kNotForced,
  kBlowupCap,
  kDegenerate,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Numerical failures are recoverable inside a report; the rest are input errors.
  bool is_numerical() const noexcept {
    return kind_ == ErrorKind::kBisectionFailure || kind_ == ErrorKind::kDomainEscape ||
           kind_ == ErrorKind::kEmptyPreimage || kind_ == ErrorKind::kCoverageViolation ||
           kind_ == ErrorKind::kNotPeriodic || kind_ == ErrorKind::kNotACycle ||
           kind_ == ErrorKind::kBlowupCap || kind_ == ErrorKind::kDegenerate;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotBijection: return "NotBijection";
    case ErrorKind::kNotSingleCycle: return "NotSingleCycle";
    case ErrorKind::kPrecondition: return "PreconditionViolation";
    case ErrorKind::kDomainViolation: return "DomainViolation";
    case ErrorKind::kDomainEscape: return "DomainEscape";
    case ErrorKind::kEmptyPreimage: return "EmptyPreimage";
    case ErrorKind::kCoverageViolation: return "CoverageViolation";
    case ErrorKind::kBisectionFailure: return "BisectionFailure";
    case ErrorKind::kNotPeriodic: return "NotPeriodic";
    case ErrorKind::kNotACycle: return "NotACycle";
    case ErrorKind::kNotForced: return "NotForced";
    case ErrorKind::kBlowupCap: return "BlowupCap";
    case ErrorKind::kDegenerate: return "Degenerate";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace sharkovsky
