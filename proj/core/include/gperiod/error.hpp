#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gperiod {

enum class ErrorCode {
  InvalidPoint,
  BadParams,
  UnknownId,
  ParseError,
  InvalidMetric,
  InvalidMap,
  GammaOutOfRange,
  NotConverged,
  ToleranceAmbiguity,
  ConsistencyViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every engine failure. The code is stable and is what
/// the command-line tool reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A residue subsequence did not meet the tail-bound stopping rule.
class NotConvergedError : public Error {
 public:
  NotConvergedError(std::size_t residue, double last_step, double gamma_hat);

  std::size_t residue() const noexcept { return residue_; }
  double last_step() const noexcept { return last_step_; }
  double gamma_hat() const noexcept { return gamma_hat_; }

 private:
  std::size_t residue_;
  double last_step_;
  double gamma_hat_;
};

}  // namespace gperiod
