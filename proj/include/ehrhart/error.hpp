#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ehrhart {

enum class ErrorCode {
  InvalidInput,
  AllZero,
  PreconditionViolated,
  AffinelyDependent,
  MixedDimensions,
  VolumeCapExceeded,
  NonPositiveDilation,
  BoxCapExceeded,
  InconsistentCounts,
  BadParams,
  NoClosedForm,
  CertificateMismatch,
  TheoremViolated,
  RouteMismatch,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map error classes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ehrhart
