#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

// Malformed or out-of-contract input (bad params, open or non-convex chain,
// unbounded constraint set). Maps to CLI exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The constraint set has no interior.
class EmptyBody : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// The body exists but is thinner than the working tolerance.
class DegenerateBody : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Iteration budget exhausted or an oracle failed to bracket. Maps to exit 2.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double lo = 0.0, double hi = 0.0)
      : std::runtime_error(what), bracket_lo(lo), bracket_hi(hi) {}

  double bracket_lo;
  double bracket_hi;
};

// Internal results disagree beyond tolerance (e.g. a Cheeger set leaking
// outside its body).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cheeger
