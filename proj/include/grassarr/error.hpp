#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grassarr {

// Bad user input: malformed files, invalid arrangements, inconsistent flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A size cap was exceeded (chain enumeration, matroid table, lattice search).
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::size_t size, std::size_t limit)
      : std::runtime_error(what + " (size " + std::to_string(size) + " exceeds limit " +
                           std::to_string(limit) + ")"),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

// Two computations that must agree did not. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace grassarr
