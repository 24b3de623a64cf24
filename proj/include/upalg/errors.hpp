#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace upalg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate table is not an n x n table over valid indices.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed.  `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string const& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}
  std::string const& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A carrier exceeds the configured element cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class OrderOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class NotSubset : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

/// The quotient product disagrees between two choices of representatives.
/// Raised only on table corruption or an implementation bug.
class WellDefinednessViolation : public Error {
 public:
  using Error::Error;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

class NotBijective : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace upalg
