#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qop {

enum class ErrorKind {
  Input,        // caller handed in something malformed
  Structural,   // data shapes incompatible (grid mismatch, too-coarse grid)
  Numerical,    // an iteration failed to converge
  Unsupported,  // outside the analyzed catalog; we refuse rather than guess
  Precondition, // a documented precondition was violated
  Refusal,      // the library declines to produce a value (e.g. spectrum of a non-observable)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, std::string message, std::vector<std::string> details)
      : std::runtime_error(std::move(message)), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

[[noreturn]] inline void throw_input(std::string msg) { throw Error(ErrorKind::Input, std::move(msg)); }
[[noreturn]] inline void throw_structural(std::string msg) { throw Error(ErrorKind::Structural, std::move(msg)); }
[[noreturn]] inline void throw_numerical(std::string msg, std::vector<std::string> details = {}) {
  throw Error(ErrorKind::Numerical, std::move(msg), std::move(details));
}
[[noreturn]] inline void throw_unsupported(std::string msg) { throw Error(ErrorKind::Unsupported, std::move(msg)); }
[[noreturn]] inline void throw_precondition(std::string msg) { throw Error(ErrorKind::Precondition, std::move(msg)); }

}  // namespace qop
