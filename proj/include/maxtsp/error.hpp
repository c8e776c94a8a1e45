#pragma once

#include <stdexcept>
#include <string>

namespace maxtsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Distance matrix violates a metric axiom beyond tolerance.
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Caller passed an argument outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact or brute-force routine was asked for an instance above its cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Matching engine found no perfect matching.
class NoPerfectMatching : public Error {
 public:
  using Error::Error;
};

}  // namespace maxtsp
