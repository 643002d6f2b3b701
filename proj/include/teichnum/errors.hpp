#pragma once

#include <stdexcept>
#include <string>

namespace teichnum {

// Input of the wrong series kind (interior vs exterior).
struct unsupported_kind_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Division by a series with vanishing constant term, f'(0)=0, etc.
struct singular_input_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Composition radius violation: |inner| too large on the sample circle.
struct composition_domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Bad sampling / aliasing-guard configuration.
struct configuration_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A stated operation precondition does not hold.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Iterative solver failed to reach the requested tolerance.
struct convergence_error : std::runtime_error {
  double last_residual;
  convergence_error(const std::string& what, double residual)
      : std::runtime_error(what), last_residual(residual) {}
};

// An iterate left the admissible set (univalence lost, orientation lost...).
struct solver_breakdown_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caps/punctures collided after a push-forward.
struct degeneration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace teichnum
