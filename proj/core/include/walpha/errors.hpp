#pragma once

#include <stdexcept>
#include <string>

namespace walpha {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument values: bad counts, negative alpha, malformed weights.
class parameter_error : public error {
 public:
  using error::error;
};

// Evaluation point outside the accepted domain, or non-finite input.
class input_domain_error : public error {
 public:
  using error::error;
};

// A type invariant was violated at construction time.
class construction_error : public error {
 public:
  using error::error;
};

// Root bracketing failed: no sign change over the given interval.
class bracket_error : public error {
 public:
  using error::error;
};

// An objective produced a non-finite value during a numeric search.
class evaluation_error : public error {
 public:
  using error::error;
};

// A quantity is undefined at a specific grid point (division by ~0).
class degenerate_point_error : public error {
 public:
  using error::error;
};

// A requested computation lies outside the proven parameter range.
class hypothesis_error : public error {
 public:
  using error::error;
};

// A function description file could not be parsed.
class spec_parse_error : public error {
 public:
  using error::error;
};

}  // namespace walpha
