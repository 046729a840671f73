#ifndef GROUPLAB_ERROR_HPP_
#define GROUPLAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouplab {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based line of the offending input, 0 when not line-oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Closure produced more elements than the configured order cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cap, std::size_t partial)
      : Error("group order exceeds cap " + std::to_string(cap) + " (closure reached " +
              std::to_string(partial) + " elements)"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A query violates p <= p^k <= |G|_p, or a predicate's stated precondition.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace grouplab

#endif  // GROUPLAB_ERROR_HPP_
