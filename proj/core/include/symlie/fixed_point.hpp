#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "symlie/error.hpp"

namespace symlie {

struct FixedPointOptions {
  double tol = 1e-14;
  int max_iter = 100;
  double divergence_bound = 1e6;
  /// Round-off floor: once the change is within stall_factor * tol of the
  /// target and has not decreased for stall_sweeps sweeps, stop.
  double stall_factor = 100.0;
  int stall_sweeps = 3;
};

struct FixedPointResult {
  Eigen::VectorXd state;
  int iterations = 0;
};

/// Iterates x <- sweep(x) until max_k |x'_k - x_k| <= tol (1 + ||x'||_inf),
/// or until the change stalls just above that level (see FixedPointOptions).
/// Throws Divergence when the iterate leaves the ball of radius
/// divergence_bound (or stops being finite), NoConvergence after max_iter.
template <class Sweep>
FixedPointResult fixed_point_solve(Sweep&& sweep, Eigen::VectorXd guess,
                                   const FixedPointOptions& opt) {
  if (!(opt.tol > 0.0) || opt.max_iter < 1) {
    fail(ErrorKind::InvalidInput, "fixed point needs tol > 0 and max_iter >= 1");
  }
  Eigen::VectorXd x = std::move(guess);
  double change = 0.0;
  double best = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int it = 1; it <= opt.max_iter; ++it) {
    Eigen::VectorXd next = sweep(std::as_const(x));
    const double size = next.size() ? next.cwiseAbs().maxCoeff() : 0.0;
    if (!next.allFinite() || size > opt.divergence_bound) {
      std::ostringstream os;
      os << "fixed point iterate reached ||x||_inf = " << size << " after " << it
         << " sweeps";
      fail(ErrorKind::Divergence, os.str());
    }
    change = next.size() ? (next - x).cwiseAbs().maxCoeff() : 0.0;
    x = std::move(next);
    const double target = opt.tol * (1.0 + size);
    if (change <= target) return {std::move(x), it};
    if (change < best) {
      best = change;
      stalled = 0;
    } else if (change <= opt.stall_factor * target && ++stalled >= opt.stall_sweeps) {
      return {std::move(x), it};
    }
  }
  std::ostringstream os;
  os << "fixed point not converged after " << opt.max_iter << " sweeps (last change "
     << change << ")";
  fail(ErrorKind::NoConvergence, os.str());
}

}  // namespace symlie
