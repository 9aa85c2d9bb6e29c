#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace misere {

/// Malformed game, grid or universe text. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A universe for which no comparison oracle is available.
class UnsupportedUniverse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (store size, lattice level, grid cells, census day) was hit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace misere
