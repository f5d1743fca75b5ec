#pragma once

#include <stdexcept>
#include <string>

namespace latsize {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signed 64-bit arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input is not full-dimensional where an operation requires it.
class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, int rank)
      : Error(what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

class NonUnimodularError : public Error {
 public:
  using Error::Error;
};

// A configured safety limit (candidate pool size, iteration budget) was hit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An invariant the algorithms guarantee failed to hold; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace latsize
