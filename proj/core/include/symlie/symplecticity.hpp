#pragma once

#include <functional>

#include <Eigen/Dense>

#include "symlie/cotangent.hpp"
#include "symlie/dipole.hpp"
#include "symlie/group_steps.hpp"
#include "symlie/two_form_sign.hpp"

namespace symlie {

template <LieGroup G>
using StepMap = std::function<CotangentPoint<G>(const CotangentPoint<G>&)>;

template <LieGroup G>
struct SymplecticReport {
  Eigen::MatrixXd jacobian;  // columns: images of tangent_basis(k)
  double defect = 0.0;       // max |J^T Omega(z1) J - Omega(z0)|
};

/// Central-difference Jacobian of a step map in the trivialized frame:
/// z0 is moved to (exp(eps eta) q0, mu0 + eps rho) and output differences
/// are read back as (log(q1(eps) q1^-1), mu1(eps) - mu1).
template <LieGroup G>
SymplecticReport<G> symplectic_defect(const G& grp, const StepMap<G>& step_map,
                                      const CotangentPoint<G>& z0, int sign,
                                      double eps = 1e-6) {
  const int n = grp.dim();
  const CotangentPoint<G> z1 = step_map(z0);
  const typename G::Element q1_inv = grp.inverse(z1.q);
  SymplecticReport<G> rep;
  rep.jacobian.resize(2 * n, 2 * n);
  for (int k = 0; k < 2 * n; ++k) {
    const TangentVector<G> v = tangent_basis(grp, k);
    auto image = [&](double e) {
      const CotangentPoint<G> zp{grp.multiply(grp.exp(typename G::Algebra(e * v.eta)), z0.q),
                                 z0.mu + e * v.rho};
      const CotangentPoint<G> out = step_map(zp);
      Eigen::VectorXd col(2 * n);
      col.head(n) = grp.log(grp.multiply(out.q, q1_inv));
      col.tail(n) = out.mu - z1.mu;
      return col;
    };
    rep.jacobian.col(k) = (image(eps) - image(-eps)) / (2.0 * eps);
  }
  const Eigen::MatrixXd diff = rep.jacobian.transpose() * two_form_matrix(grp, z1, sign) *
                                   rep.jacobian -
                               two_form_matrix(grp, z0, sign);
  rep.defect = diff.cwiseAbs().maxCoeff();
  return rep;
}

/// Non-variational control: q1 from an RKMK group step along the field
/// frozen at mu0, mu1 = mu0 + h n(z0).
template <LieGroup G>
CotangentPoint<G> euler_momentum_control_step(const TrivializedSystem<G>& sys,
                                              const CotangentPoint<G>& z0, const StepConfig& cfg,
                                              const ButcherTableau& t) {
  const G& grp = sys.group();
  GroupVectorField<G> frozen = [&](const typename G::Element& q) {
    return sys.f({q, z0.mu}).xi;
  };
  return {rkmk_group_step(grp, frozen, z0.q, cfg, t), z0.mu + cfg.h * sys.f(z0).nu};
}

struct CalibrationReport {
  double defect_plus = 0.0;   // sign +1
  double defect_minus = 0.0;  // sign -1
  int sign = 0;               // 0 if neither or both are below the threshold
};

inline constexpr double kCalibrationThreshold = 1e-8;

/// One VRKMK Gauss-2 step of the preset dipole at h = 1e-3, checked
/// with both signs of the two-form.
CalibrationReport calibrate_two_form_sign(double fp_tol = 1e-15);

}  // namespace symlie
