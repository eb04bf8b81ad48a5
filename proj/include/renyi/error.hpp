#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace renyi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad arguments, broken invariants, mismatched shapes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter outside the domain of the estimator (γ ≤ 0, α ≤ 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfAlphabet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DuplicateSymbol : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NegativeCount : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CountOverflow : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyJoint : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyHistogram : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class AlphabetMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class StreamTooShort : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class AlphabetTooLarge : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Text input that does not match the expected CSV grammar.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace renyi
