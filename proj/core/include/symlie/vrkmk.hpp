#pragma once

#include <vector>

#include "symlie/step.hpp"
#include "symlie/system.hpp"

namespace symlie {

/// One step of the variational Runge-Kutta-Munthe-Kaas method on G x g*.
///
/// Stage equations, with dexpinv_(r) the degree-r truncation and r taken
/// from cfg or the tableau:
///
///   X_i       = h sum_j a_ij dexpinv_(r),X_j xi_j
///   (xi_i, n_i) = f(exp(X_i) q0, M_i)
///   Y         = h sum_i b_i dexpinv_(r),X_i xi_i
///   Lambda    = dexp*_{-Y} (mu0 + h sum_i b_i Ad*_{exp(X_i)} n_i)
///   lambda_i  = -h b_i dexp*_{X_i} n_i + h P*_(r)(X_i, xi_i) (b_i Lambda + sum_j a_ji lambda_j)
///   M_i       = (1/b_i) dexpinv_(r),X_i^* (b_i Lambda + sum_j a_ji lambda_j)
///
/// and then q1 = exp(Y) q0, mu1 = Ad*_{exp(-Y)} (mu0 + h sum_i b_i Ad*_{exp(X_i)} n_i).
///
/// The unknowns are (X_i, M_i, lambda_i); xi_i and n_i ride along in the
/// iteration vector so that each sweep needs a single f evaluation per
/// stage. A sweep updates X, then (xi, n), then Lambda, lambda, and M.
template <LieGroup G>
StepResult<G> vrkmk_step(const TrivializedSystem<G>& sys, const CotangentPoint<G>& z0,
                         const StepConfig& cfg, const ButcherTableau& t,
                         const StageState* warm = nullptr) {
  using Algebra = typename G::Algebra;
  using Dual = typename G::Dual;
  using Element = typename G::Element;

  cfg.validate();
  t.require_nonzero_weights();
  const G& grp = sys.group();
  const int s = t.stages();
  const int r = cfg.resolve_cutoff(t);
  detail::check_cutoff(r);
  const double h = cfg.h;
  const detail::StageLayout L{s, grp.dim(), 5};
  enum Block { kX = 0, kM = 1, kLam = 2, kXi = 3, kN = 4 };

  // Stage vectors in working form.
  std::vector<Algebra> X(s), Xn(s), xi(s), u(s);
  std::vector<Dual> M(s), lam(s), n(s), lam_new(s), sigma(s);
  std::vector<Element> expX(s);

  auto momentum_sum = [&]() {
    Dual acc = z0.mu;
    for (int i = 0; i < s; ++i) acc += h * t.b(i) * grp.Ad_star(expX[i], n[i]);
    return acc;
  };

  auto sweep = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < s; ++i) {
      X[i] = L.get<Algebra>(x, kX, i);
      M[i] = L.get<Dual>(x, kM, i);
      lam[i] = L.get<Dual>(x, kLam, i);
      xi[i] = L.get<Algebra>(x, kXi, i);
    }
    for (int j = 0; j < s; ++j) u[j] = dexpinv_trunc(grp, r, X[j], xi[j]);
    for (int i = 0; i < s; ++i) {
      Algebra acc = grp.zero_algebra();
      for (int j = 0; j < s; ++j) {
        if (t.a(i, j) != 0.0) acc += t.a(i, j) * u[j];
      }
      Xn[i] = h * acc;
    }
    for (int i = 0; i < s; ++i) {
      expX[i] = grp.exp(Xn[i]);
      const auto fz = sys.f({grp.multiply(expX[i], z0.q), M[i]});
      xi[i] = fz.xi;
      n[i] = fz.nu;
    }
    Algebra Y = grp.zero_algebra();
    for (int i = 0; i < s; ++i) Y += h * t.b(i) * dexpinv_trunc(grp, r, Xn[i], xi[i]);
    const Dual Lambda = grp.dexp_star(-Y, momentum_sum());

    // sigma_i = b_i Lambda + sum_j a_ji lambda_j
    auto sigma_from = [&](const std::vector<Dual>& lm) {
      for (int i = 0; i < s; ++i) {
        Dual acc = t.b(i) * Lambda;
        for (int j = 0; j < s; ++j) {
          if (t.a(j, i) != 0.0) acc += t.a(j, i) * lm[j];
        }
        sigma[i] = acc;
      }
    };
    sigma_from(lam);
    for (int i = 0; i < s; ++i) {
      lam_new[i] = -h * t.b(i) * grp.dexp_star(Xn[i], n[i]) +
                   h * p_star_poly(grp, r, Xn[i], xi[i], sigma[i]);
    }
    sigma_from(lam_new);

    Eigen::VectorXd out(L.size());
    for (int i = 0; i < s; ++i) {
      L.set(out, kX, i, Xn[i]);
      L.set(out, kM, i, Dual(dexpinv_trunc_star(grp, r, Xn[i], sigma[i]) / t.b(i)));
      L.set(out, kLam, i, lam_new[i]);
      L.set(out, kXi, i, xi[i]);
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
      L.set(guess, kX, i, Algebra(h * t.c(i) * f0.xi));
      L.set(guess, kM, i, z0.mu);
      L.set(guess, kLam, i, Dual(-h * t.b(i) * f0.nu));
      L.set(guess, kXi, i, f0.xi);
      L.set(guess, kN, i, f0.nu);
    }
  }

  auto solved = fixed_point_solve(sweep, std::move(guess), cfg.fixed_point());

  Algebra Y = grp.zero_algebra();
  for (int i = 0; i < s; ++i) {
    X[i] = L.get<Algebra>(solved.state, kX, i);
    xi[i] = L.get<Algebra>(solved.state, kXi, i);
    n[i] = L.get<Dual>(solved.state, kN, i);
    expX[i] = grp.exp(X[i]);
    Y += h * t.b(i) * dexpinv_trunc(grp, r, X[i], xi[i]);
  }
  const Dual mu_bar = momentum_sum();
  CotangentPoint<G> z1{grp.multiply(grp.exp(Y), z0.q), grp.Ad_star(grp.exp(-Y), mu_bar)};
  return {std::move(z1), {std::move(solved.state), solved.iterations}};
}

}  // namespace symlie
