#pragma once

#include <stdexcept>

namespace comb {

// Bad arguments caught before any computation starts.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation ran but produced something outside its contract
// (eigenvalue escaping [-1,1], contour too close to a pole, ...).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The series I(a,b) has no finite value for the requested arguments.
struct divergence_error : numerical_error {
  using numerical_error::numerical_error;
};

// Problem size exceeds a configured cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace comb
