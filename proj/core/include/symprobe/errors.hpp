#pragma once

#include <stdexcept>
#include <string>

namespace symprobe {

/// Input violates a documented precondition (bad label, non-symmetric tensor, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds what a grid, table or model was built for.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Round-off checks failed beyond tolerance; usually means an insufficient grid.
class NumericalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symprobe
