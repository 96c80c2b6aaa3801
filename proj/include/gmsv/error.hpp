#pragma once

#include <stdexcept>
#include <string>

namespace gmsv {

/// Raised for malformed or inconsistent input data (files, labels, views).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gmsv
