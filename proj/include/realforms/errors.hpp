#pragma once

#include <stdexcept>
#include <string>

namespace realforms {

// Malformed input (CLI grammar, JSON payloads). Exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid syntax but outside the domain of an operation
// (degree < 2, non-cocycle input, division by zero, ...). Exit code 3.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified-by-construction invariant failed. Exit code 4.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace realforms
