#pragma once

#include <stdexcept>
#include <string>

namespace leafstars {

// Input text could not be parsed. line() is 1-based; 0 when no single line
// is to blame (e.g. empty input).
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Structurally invalid graph (self-loop, duplicate edge, endpoint out of range).
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's stated precondition.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Exact computation refused because the input exceeds a size cap.
class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input lies outside the supported class (e.g. canonical form of a non-forest).
class UnsupportedInputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace leafstars
