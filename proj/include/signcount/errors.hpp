// Error taxonomy. Every throwing path maps onto one of the CLI exit codes:
//   2  degenerate or otherwise invalid mathematical input (witness attached)
//   3  parse / IO failure
//   4  guardrail exceeded (problem size refused, never degraded)
//   5  internal cross-check failure (two independent routes disagreed)
#pragma once

#include <stdexcept>
#include <string>

#include "signcount/signmask.hpp"

namespace signcount {

enum class ExitCode : int {
  ok = 0,
  math = 2,
  parse = 3,
  guardrail = 4,
  crosscheck = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ExitCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ExitCode code_;
};

class MathError : public Error {
 public:
  explicit MathError(const std::string& msg) : Error(ExitCode::math, msg) {}
};

// degenerate weight vector / projection; carries the vanishing sign vector
class DegenerateError : public MathError {
 public:
  DegenerateError(const std::string& msg, SignMask witness)
      : MathError(msg + " (witness " + to_pm_string(witness) + ")"), witness_(witness) {}
  SignMask witness() const { return witness_; }

 private:
  SignMask witness_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(ExitCode::parse, msg) {}
};

class GuardrailError : public Error {
 public:
  explicit GuardrailError(const std::string& msg) : Error(ExitCode::guardrail, msg) {}
};

class CrossCheckError : public Error {
 public:
  explicit CrossCheckError(const std::string& msg) : Error(ExitCode::crosscheck, msg) {}
};

}  // namespace signcount
