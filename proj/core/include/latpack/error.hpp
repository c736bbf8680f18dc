#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latpack {

/// Raised when an argument violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public PreconditionError {
public:
  CapExceeded(const std::string& what, int n, int cap)
      : PreconditionError(what + ": order " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(cap) +
                          " (raise it with --cap)"),
        n_(n), cap_(cap) {}

  int order() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

private:
  int n_;
  int cap_;
};

/// Malformed corpus text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace latpack
