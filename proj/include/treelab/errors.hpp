#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treelab {

// Malformed text input. position() is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input outside the domain of an operation (e.g. a 312-containing
// permutation handed to a map defined on 312-avoiders).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction did not (e.g. a series
// division left a nonzero remainder).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treelab
