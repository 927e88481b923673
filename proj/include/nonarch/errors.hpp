#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonarch {

struct TagMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CarrierViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputInSubgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TargetOutsideImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainNotNested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyChain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CharacteristicTwo : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by expression and literal parsers; pos is a 0-based offset into
// the input text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"),
        pos(at) {}
};

}  // namespace nonarch
