#pragma once

#include <stdexcept>
#include <string>

namespace cherry {

// Search space larger than the configured cap. Never silently truncated.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters that no member of the requested family can satisfy.
class infeasible_parameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Overlapping vertex blocks in a construction (G1/G2 at extreme parameters).
class index_collision : public infeasible_parameters {
 public:
  using infeasible_parameters::infeasible_parameters;
};

// Input violates a documented precondition of a transformation.
class precondition_violation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A post-condition check failed; indicates a bug or a non-shifted input.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class undefined_density : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cherry
