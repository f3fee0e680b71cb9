#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A precondition on the inputs of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A claimed algebraic relation (x^2 = 1, x^{2p} = 1, invertibility, ...) fails.
class RelationViolation : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed; indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration hit its configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t reached, std::size_t layer = 0)
      : Error(what + " (reached " + std::to_string(reached) + " elements at layer " +
              std::to_string(layer) + ")"),
        reached_(reached),
        layer_(layer) {}

  std::size_t reached() const noexcept { return reached_; }
  std::size_t layer() const noexcept { return layer_; }

 private:
  std::size_t reached_;
  std::size_t layer_;
};

/// A sparse model element left its configured index window.
class WindowExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lef
