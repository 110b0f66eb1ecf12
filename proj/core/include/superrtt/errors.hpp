#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superrtt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduced denominator vanishes at the requested evaluation point.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Rewriting exceeded its step budget (usually a mis-oriented rule set).
class NonTerminating : public Error {
 public:
  using Error::Error;
};

/// A relation cannot be solved for a leading word with invertible coefficient.
class OrientationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGenerator : public Error {
 public:
  using Error::Error;
};

class UnknownPresentation : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset) + " (expected " + expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace superrtt
