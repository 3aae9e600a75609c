#pragma once

#include <stdexcept>
#include <string>

namespace morse {

/// Raised for malformed input: bad posets, invalid matchings, violated
/// preconditions. Messages name the offending object.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a rank-dependent operation is requested on a non-graded poset.
class NotGraded : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive operation exceeds its size guard.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace morse
