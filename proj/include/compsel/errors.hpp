// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace compsel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Arguments outside a function's mathematical domain (e.g. zero distance).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Channel matrix is numerically rank deficient.
class RankError : public Error {
 public:
  using Error::Error;
};

class SchedulingError : public Error {
 public:
  using Error::Error;
};

class InfeasibleOverheadError : public Error {
 public:
  using Error::Error;
};

// The decision rule does not change sign along the requested ray.
class NoBoundaryError : public Error {
 public:
  using Error::Error;
};

}  // namespace compsel
