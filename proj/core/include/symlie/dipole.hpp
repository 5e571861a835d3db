#pragma once

#include <Eigen/Dense>

#include "symlie/so3.hpp"
#include "symlie/system.hpp"

namespace symlie {

/// Pendulum with a charged dipole at its tip, moving in gravity and in the
/// field of a fixed point charge. Rod of length 1 pivoting at the origin;
/// charges +-q of mass m/2 at body positions (0, +-alpha, -1).
struct DipoleParams {
  double m = 1.0;
  double charge = 1.0;
  double beta = 1.0;   // fixed field charge
  double alpha = 0.1;  // half length of the short rod
  /// Coefficient of m e3^T g e3 in H. The rod points along -e3 in the body
  /// frame, so -1 is gravity pulling the tip down; +1 flips it.
  double gravity_sign = -1.0;
  Eigen::Vector3d field_charge_pos{0.0, 0.0, -1.5};

  /// m diag(1 + alpha^2, 1, alpha^2)
  Eigen::Matrix3d inertia() const;
  Eigen::Vector3d body_charge_pos(int sign) const { return {0.0, sign * alpha, -1.0}; }

  /// Throws InvalidInput unless m > 0, alpha > 0 and gravity_sign = +-1.
  void validate() const;
};

/// Distances below this to the field charge are reported as Singularity.
inline constexpr double kCollisionDistance = 1e-9;

/// H(g, mu) = 1/2 mu^T g I^-1 g^T mu + s m e3^T g e3
///            + q beta (|g y+ - z|^-1 - |g y- - z|^-1)
double dipole_energy(const DipoleParams& p, const CotangentPoint<SO3>& z);

/// Analytic f = (D2 H, -(D1 H) . q^-1).
BigAlgebraElement<SO3> dipole_f(const DipoleParams& p, const CotangentPoint<SO3>& z);

/// g(0) = [[1,0,0],[0,0,-1],[0,1,0]], mu(0) = g(0) I g(0)^T e2.
CotangentPoint<SO3> dipole_preset_initial_state(const DipoleParams& p);

class DipoleSystem final : public TrivializedSystem<SO3> {
 public:
  explicit DipoleSystem(DipoleParams params = {});

  const SO3& group() const override { return group_; }
  BigAlgebraElement<SO3> f(const CotangentPoint<SO3>& z) const override;
  bool has_energy() const override { return true; }
  double energy(const CotangentPoint<SO3>& z) const override;

  const DipoleParams& params() const { return params_; }

 private:
  SO3 group_;
  DipoleParams params_;
};

}  // namespace symlie
