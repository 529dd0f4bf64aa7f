#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supchar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: malformed input, wrong size, non-prime modulus, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would have to enumerate more elements than allowed.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A spanning set is not closed under multiplication.
class NotClosed : public Error {
 public:
  NotClosed(const std::string& what, int left, int right)
      : Error(what), left_(left), right_(right) {}
  /// Indices of the two basis elements whose product escapes the span.
  int left() const { return left_; }
  int right() const { return right_; }

 private:
  int left_;
  int right_;
};

class NotIdeal : public Error {
 public:
  using Error::Error;
};

class NotDirectSum : public Error {
 public:
  using Error::Error;
};

class SquareNonzero : public Error {
 public:
  using Error::Error;
};

/// Raised when a subgroup is not an intersection of supercharacter kernels.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed. Indicates a bug, never bad input.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

#define SUPCHAR_CHECK(cond, msg)                                      \
  do {                                                                \
    if (!(cond)) throw ::supchar::CheckFailed(std::string(msg) +      \
                                              " [" #cond "]");        \
  } while (0)

/// Process-wide cap on the number of group elements any routine enumerates.
std::uint64_t element_bound();
void set_element_bound(std::uint64_t bound);
/// Throws BoundExceeded when `count` is above the current bound.
void require_within_bound(std::uint64_t count, const std::string& what);

/// Largest prime accepted for character computations.
int max_prime();
void set_max_prime(int p);

}  // namespace supchar
