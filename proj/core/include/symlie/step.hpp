#pragma once

#include <optional>

#include <Eigen/Dense>

#include "symlie/cotangent.hpp"
#include "symlie/fixed_point.hpp"
#include "symlie/tableau.hpp"

namespace symlie {

/// Which of the two algebraically equivalent VCG momentum updates to use:
/// through mu_bar_1, or written out from mu_bar_0.
enum class VcgMomentumForm { FromMu1, FromMu0 };

struct StepConfig {
  double h = 0.0;
  double fp_tol = 1e-14;
  int fp_max_iter = 100;
  /// Overrides the tableau's cut-off for RKMK-type methods.
  std::optional<int> cutoff_r;
  VcgMomentumForm vcg_form = VcgMomentumForm::FromMu1;

  /// Throws InvalidInput unless h != 0, fp_tol > 0 and fp_max_iter >= 1.
  void validate() const;
  FixedPointOptions fixed_point() const { return {fp_tol, fp_max_iter}; }
  int resolve_cutoff(const ButcherTableau& t) const { return cutoff_r.value_or(t.cutoff_r.value_or(0)); }
};

/// Converged stage unknowns of one step, flattened. Feeding it back as the
/// initial guess of the next step warm-starts the iteration. The layout is
/// private to each method; a state from another method or tableau is
/// ignored.
struct StageState {
  Eigen::VectorXd unknowns;
  int iterations = 0;
};

template <LieGroup G>
struct StepResult {
  CotangentPoint<G> z;
  StageState stages;
};

namespace detail {

// Per-stage vectors of dimension n stacked as blocks of s stages each.
struct StageLayout {
  int s;
  int n;
  int blocks;

  int size() const { return s * n * blocks; }
  int offset(int blk, int i) const { return (blk * s + i) * n; }

  template <class V>
  V get(const Eigen::VectorXd& x, int blk, int i) const {
    return x.segment(offset(blk, i), n);
  }
  template <class V>
  void set(Eigen::VectorXd& x, int blk, int i, const V& v) const {
    x.segment(offset(blk, i), n) = v;
  }
};

inline bool warm_start_usable(const StageState* warm, const StageLayout& layout) {
  return warm != nullptr && warm->unknowns.size() == layout.size() &&
         warm->unknowns.allFinite();
}

}  // namespace detail

}  // namespace symlie
