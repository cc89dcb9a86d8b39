#pragma once

#include <stdexcept>
#include <string>

namespace zitterlab {

// Adding a <= b when b < a already holds.
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A projection required by the operation's contract does not exist.
struct ProjectionUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An interval endpoint fails the betweenness condition.
struct NotBetween : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// beta is undefined for dp + dq = 0.
struct ZeroDuration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration or brute-force size exceeds the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside the admissible domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fewer field slices than a finite-difference stencil needs.
struct InsufficientHistory : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zitterlab
