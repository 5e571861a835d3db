#include "symlie/step.hpp"

#include <cmath>

#include "symlie/error.hpp"

namespace symlie {

void StepConfig::validate() const {
  if (h == 0.0 || !std::isfinite(h)) fail(ErrorKind::InvalidInput, "step size must be finite and nonzero");
  if (!(fp_tol > 0.0)) fail(ErrorKind::InvalidInput, "fp_tol must be positive");
  if (fp_max_iter < 1) fail(ErrorKind::InvalidInput, "fp_max_iter must be >= 1");
}

}  // namespace symlie
