#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fba {

/// Malformed forest, coefficient or rational text. `position()` is the byte
/// offset into the input where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A symbol that is not in the alphabet, or used with the wrong kind.
class SymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation of a negative power of lambda at lambda = 0.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// `verify` was asked for a suite it does not know.
class UnknownSuiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fba
