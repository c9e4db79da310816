#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-domain argument (probability outside [0,1], k <= 0, cycle with n < 3, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input violates an operation's precondition, e.g. a triangle where a
// triangle-free graph is required.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Raised by the brute-force oracle instead of approximating.
class OracleOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace tricover
