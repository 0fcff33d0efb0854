#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or spec text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// A hexagon layout that cannot be placed on the hexagonal lattice as a
/// catacondensed system. Carries the hexagon ids involved.
class UnrealizableError : public Error {
 public:
  UnrealizableError(const std::string& what, std::vector<int> hexagons)
      : Error(what), hexagons_(std::move(hexagons)) {}
  const std::vector<int>& hexagons() const noexcept { return hexagons_; }

 private:
  std::vector<int> hexagons_;
};

/// Exhaustive search requested above the configured size limit.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace wpi
