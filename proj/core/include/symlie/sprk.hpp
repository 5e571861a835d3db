#pragma once

#include <vector>

#include "symlie/abelian.hpp"
#include "symlie/step.hpp"
#include "symlie/system.hpp"

namespace symlie {

/// Symplectic partitioned Runge-Kutta step on T*R^n: positions use (a, b),
/// momenta use hat_coefficients(t).
///
///   Q_i = q0 + h sum_j a_ij xi_j,   M_i = mu0 + h sum_j a^_ij n_j
///   (xi_i, n_i) = f(Q_i, M_i)
///   q1 = q0 + h sum_i b_i xi_i,     mu1 = mu0 + h sum_i b_i n_i
inline StepResult<Abelian> sprk_step(const TrivializedSystem<Abelian>& sys,
                                     const CotangentPoint<Abelian>& z0, const StepConfig& cfg,
                                     const ButcherTableau& t, const StageState* warm = nullptr) {
  cfg.validate();
  const ButcherTableau th = hat_coefficients(t);
  const int s = t.stages();
  const double h = cfg.h;
  const detail::StageLayout L{s, sys.group().dim(), 2};
  enum Block { kXi = 0, kN = 1 };

  auto sweep = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd out(L.size());
    for (int i = 0; i < s; ++i) {
      Eigen::VectorXd Q = z0.q;
      Eigen::VectorXd M = z0.mu;
      for (int j = 0; j < s; ++j) {
        Q += h * t.a(i, j) * L.get<Eigen::VectorXd>(x, kXi, j);
        M += h * th.a(i, j) * L.get<Eigen::VectorXd>(x, kN, j);
      }
      const auto fz = sys.f({Q, M});
      L.set(out, kXi, i, fz.xi);
      L.set(out, kN, i, fz.nu);
    }
    return out;
  };

  Eigen::VectorXd guess(L.size());
  if (detail::warm_start_usable(warm, L)) {
    guess = warm->unknowns;
  } else {
    const auto f0 = sys.f(z0);
    for (int i = 0; i < s; ++i) {
      L.set(guess, kXi, i, f0.xi);
      L.set(guess, kN, i, f0.nu);
    }
  }
  auto solved = fixed_point_solve(sweep, std::move(guess), cfg.fixed_point());

  CotangentPoint<Abelian> z1{z0.q, z0.mu};
  for (int i = 0; i < s; ++i) {
    z1.q += h * t.b(i) * L.get<Eigen::VectorXd>(solved.state, kXi, i);
    z1.mu += h * t.b(i) * L.get<Eigen::VectorXd>(solved.state, kN, i);
  }
  return {std::move(z1), {std::move(solved.state), solved.iterations}};
}

}  // namespace symlie
