#pragma once

#include <functional>
#include <vector>

#include "symlie/step.hpp"
#include "symlie/vcg.hpp"

namespace symlie {

template <LieGroup G>
using GroupVectorField = std::function<typename G::Algebra(const typename G::Element&)>;

/// RKMK step for q' = f_g(q) q:
///   x_i = h sum_j a_ij dexpinv_(r),x_j xi_j,  xi_i = f_g(exp(x_i) q0),
///   q1 = exp(h sum_i b_i dexpinv_(r),x_i xi_i) q0.
template <LieGroup G>
typename G::Element rkmk_group_step(const G& grp, const GroupVectorField<G>& f_g,
                                    const typename G::Element& q0, const StepConfig& cfg,
                                    const ButcherTableau& t) {
  using Algebra = typename G::Algebra;
  cfg.validate();
  const int s = t.stages();
  const int r = cfg.resolve_cutoff(t);
  detail::check_cutoff(r);
  const double h = cfg.h;
  const detail::StageLayout L{s, grp.dim(), 2};
  enum Block { kX = 0, kXi = 1 };

  std::vector<Algebra> u(s);
  auto sweep = [&](const Eigen::VectorXd& x) {
    for (int j = 0; j < s; ++j) {
      u[j] = dexpinv_trunc(grp, r, L.get<Algebra>(x, kX, j), L.get<Algebra>(x, kXi, j));
    }
    Eigen::VectorXd out(L.size());
    for (int i = 0; i < s; ++i) {
      Algebra xi = grp.zero_algebra();
      for (int j = 0; j < s; ++j) {
        if (t.a(i, j) != 0.0) xi += h * t.a(i, j) * u[j];
      }
      L.set(out, kX, i, xi);
      L.set(out, kXi, i, f_g(grp.multiply(grp.exp(xi), q0)));
    }
    return out;
  };

  const Algebra f0 = f_g(q0);
  Eigen::VectorXd guess(L.size());
  for (int i = 0; i < s; ++i) {
    L.set(guess, kX, i, Algebra(h * t.c(i) * f0));
    L.set(guess, kXi, i, f0);
  }
  const auto solved = fixed_point_solve(sweep, std::move(guess), cfg.fixed_point());
  Algebra Y = grp.zero_algebra();
  for (int i = 0; i < s; ++i) {
    Y += h * t.b(i) *
         dexpinv_trunc(grp, r, L.get<Algebra>(solved.state, kX, i),
                       L.get<Algebra>(solved.state, kXi, i));
  }
  return grp.multiply(grp.exp(Y), q0);
}

/// Crouch-Grossman step for q' = f_g(q) q with frozen exponential chains.
template <LieGroup G>
typename G::Element cg_group_step(const G& grp, const GroupVectorField<G>& f_g,
                                  const typename G::Element& q0, const StepConfig& cfg,
                                  const ButcherTableau& t) {
  using Algebra = typename G::Algebra;
  cfg.validate();
  const int s = t.stages();
  const detail::StageLayout L{s, grp.dim(), 1};

  std::vector<Algebra> xi(s);
  detail::CgChains<G> chains;
  auto sweep = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < s; ++i) xi[i] = L.get<Algebra>(x, 0, i);
    chains.build(grp, t, cfg.h, xi, q0);
    Eigen::VectorXd out(L.size());
    for (int i = 0; i < s; ++i) L.set(out, 0, i, f_g(chains.stage_point(i)));
    return out;
  };

  const Algebra f0 = f_g(q0);
  Eigen::VectorXd guess(L.size());
  for (int i = 0; i < s; ++i) L.set(guess, 0, i, f0);
  const auto solved = fixed_point_solve(sweep, std::move(guess), cfg.fixed_point());
  for (int i = 0; i < s; ++i) xi[i] = L.get<Algebra>(solved.state, 0, i);
  chains.build(grp, t, cfg.h, xi, q0);
  return chains.end_point();
}

}  // namespace symlie
