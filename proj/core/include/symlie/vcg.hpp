#pragma once

#include <vector>

#include "symlie/step.hpp"
#include "symlie/system.hpp"

namespace symlie {

namespace detail {

// Frozen-exponential chains of a Crouch-Grossman step. The rightmost
// factor belongs to stage 1:
//   Q_ij = exp(h a_ij xi_j) Q_i,j-1,  Q_i0 = q0,  Q_i = Q_is
//   q^j  = exp(h b_j xi_j) q^(j-1),   q^0 = q0,   q1 = q^s
template <LieGroup G>
struct CgChains {
  std::vector<std::vector<typename G::Element>> stage;  // stage[i][j] = Q_i,j+1
  std::vector<typename G::Element> step;                // step[j] = q^(j+1)

  void build(const G& grp, const ButcherTableau& t, double h,
             const std::vector<typename G::Algebra>& xi, const typename G::Element& q0) {
    const int s = t.stages();
    stage.assign(s, std::vector<typename G::Element>(s));
    step.resize(s);
    for (int i = 0; i < s; ++i) {
      typename G::Element acc = q0;
      for (int j = 0; j < s; ++j) {
        if (t.a(i, j) != 0.0) acc = grp.multiply(grp.exp(h * t.a(i, j) * xi[j]), acc);
        stage[i][j] = acc;
      }
    }
    typename G::Element acc = q0;
    for (int j = 0; j < s; ++j) {
      acc = grp.multiply(grp.exp(h * t.b(j) * xi[j]), acc);
      step[j] = acc;
    }
  }

  const typename G::Element& stage_point(int i) const { return stage[i].back(); }
  const typename G::Element& end_point() const { return step.back(); }
};

}  // namespace detail

/// One step of the variational Crouch-Grossman method on G x g*.
///
/// With the chains Q_ij, q^j of the underlying CG method,
///
///   (xi_i, n_i) = f(Q_i, M_i)
///   mu_bar_0 = Ad*_{q0} mu0,  n_bar_i = Ad*_{Q_i} n_i
///   mu_bar_1 = mu_bar_0 + h sum_j b_j n_bar_j
///   M_i = dexp*_{h b_i xi_i} Ad*_{(q^i)^-1} mu_bar_1
///         - h sum_j (b_j a_ji / b_i) dexp*_{h a_ji xi_i} Ad*_{Q_ji^-1} n_bar_j
///
/// and mu1 = Ad*_{q1^-1} mu_bar_1. Unknowns are (xi_i, M_i); n_i is carried
/// along. cfg.vcg_form selects the expanded mu_bar_0 form of the M update.
template <LieGroup G>
StepResult<G> vcg_step(const TrivializedSystem<G>& sys, const CotangentPoint<G>& z0,
                       const StepConfig& cfg, const ButcherTableau& t,
                       const StageState* warm = nullptr) {
  using Algebra = typename G::Algebra;
  using Dual = typename G::Dual;

  cfg.validate();
  t.require_nonzero_weights();
  const G& grp = sys.group();
  const int s = t.stages();
  const double h = cfg.h;
  const detail::StageLayout L{s, grp.dim(), 3};
  enum Block { kXi = 0, kM = 1, kN = 2 };

  std::vector<Algebra> xi(s);
  std::vector<Dual> M(s), n(s), n_bar(s);
  detail::CgChains<G> chains;
  const Dual mu_bar0 = grp.Ad_star(z0.q, z0.mu);

  auto bar_sum = [&]() {
    Dual acc = mu_bar0;
    for (int j = 0; j < s; ++j) acc += h * t.b(j) * n_bar[j];
    return acc;
  };

  auto sweep = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < s; ++i) {
      xi[i] = L.get<Algebra>(x, kXi, i);
      M[i] = L.get<Dual>(x, kM, i);
    }
    chains.build(grp, t, h, xi, z0.q);
    for (int i = 0; i < s; ++i) {
      const auto& Qi = chains.stage_point(i);
      const auto fz = sys.f({Qi, M[i]});
      xi[i] = fz.xi;
      n[i] = fz.nu;
      n_bar[i] = grp.Ad_star(Qi, n[i]);
    }
    chains.build(grp, t, h, xi, z0.q);
    const Dual mu_bar1 = bar_sum();

    Eigen::VectorXd out(L.size());
    for (int i = 0; i < s; ++i) {
      const Algebra step_arg = h * t.b(i) * xi[i];
      auto pull = [&](const Dual& v) {
        return grp.dexp_star(step_arg, grp.Ad_star(grp.inverse(chains.step[i]), v));
      };
      Dual Mi = cfg.vcg_form == VcgMomentumForm::FromMu1 ? pull(mu_bar1) : pull(mu_bar0);
      for (int j = 0; j < s; ++j) {
        const double aji = t.a(j, i);
        if (cfg.vcg_form == VcgMomentumForm::FromMu0) Mi += h * t.b(j) * pull(n_bar[j]);
        if (aji == 0.0) continue;
        Mi -= h * (t.b(j) * aji / t.b(i)) *
              grp.dexp_star(Algebra(h * aji * xi[i]),
                            grp.Ad_star(grp.inverse(chains.stage[j][i]), n_bar[j]));
      }
      L.set(out, kXi, i, xi[i]);
      L.set(out, kM, i, Mi);
      L.set(out, kN, i, n[i]);
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
      L.set(guess, kM, i, z0.mu);
      L.set(guess, kN, i, f0.nu);
    }
  }

  auto solved = fixed_point_solve(sweep, std::move(guess), cfg.fixed_point());

  for (int i = 0; i < s; ++i) {
    xi[i] = L.get<Algebra>(solved.state, kXi, i);
    n[i] = L.get<Dual>(solved.state, kN, i);
  }
  // n_i was evaluated at the stage points of the chains built from the
  // previous iterate; at convergence the two coincide to tolerance.
  chains.build(grp, t, h, xi, z0.q);
  for (int i = 0; i < s; ++i) n_bar[i] = grp.Ad_star(chains.stage_point(i), n[i]);
  const auto& q1 = chains.end_point();
  CotangentPoint<G> z1{q1, grp.Ad_star(grp.inverse(q1), bar_sum())};
  return {std::move(z1), {std::move(solved.state), solved.iterations}};
}

}  // namespace symlie
