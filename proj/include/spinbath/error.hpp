#pragma once

#include <stdexcept>
#include <string>

namespace spinbath {

enum class ErrorCode {
  zero_norm,
  norm_deviation,
  invalid_xi,
  invalid_bath,
  not_hermitian,
  psd_violation,
  no_convergence,
  bath_too_large,
  invalid_argument,
  io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::zero_norm: return "ZeroNorm";
    case ErrorCode::norm_deviation: return "NormDeviation";
    case ErrorCode::invalid_xi: return "InvalidXi";
    case ErrorCode::invalid_bath: return "InvalidBath";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::psd_violation: return "PSDViolation";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::bath_too_large: return "BathTooLarge";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io: return "IOError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinbath
