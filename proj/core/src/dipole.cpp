#include "symlie/dipole.hpp"

#include <sstream>

#include "symlie/error.hpp"

namespace symlie {

Eigen::Matrix3d DipoleParams::inertia() const {
  return m * Eigen::Vector3d(1.0 + alpha * alpha, 1.0, alpha * alpha).asDiagonal();
}

void DipoleParams::validate() const {
  if (!(m > 0.0)) fail(ErrorKind::InvalidInput, "dipole mass must be positive");
  if (!(alpha > 0.0)) fail(ErrorKind::InvalidInput, "dipole half length must be positive");
  if (gravity_sign != 1.0 && gravity_sign != -1.0) {
    fail(ErrorKind::InvalidInput, "gravity_sign must be +1 or -1");
  }
}

namespace {

Eigen::Vector3d inverse_inertia_diag(const DipoleParams& p) {
  return Eigen::Vector3d(1.0 / (1.0 + p.alpha * p.alpha), 1.0, 1.0 / (p.alpha * p.alpha)) / p.m;
}

// Offset of a charge from the field charge; throws on collision.
Eigen::Vector3d charge_offset(const DipoleParams& p, const Eigen::Matrix3d& g, int sign) {
  const Eigen::Vector3d d = g * p.body_charge_pos(sign) - p.field_charge_pos;
  if (d.norm() < kCollisionDistance) {
    std::ostringstream os;
    os << "charge " << (sign > 0 ? '+' : '-') << " at distance " << d.norm()
       << " from the field charge";
    fail(ErrorKind::Singularity, os.str());
  }
  return d;
}

// g I^-1 g^T mu
Eigen::Vector3d angular_velocity(const DipoleParams& p, const CotangentPoint<SO3>& z) {
  return z.q * inverse_inertia_diag(p).cwiseProduct(z.q.transpose() * z.mu);
}

}  // namespace

double dipole_energy(const DipoleParams& p, const CotangentPoint<SO3>& z) {
  const Eigen::Vector3d xi = angular_velocity(p, z);
  const double kinetic = 0.5 * z.mu.dot(xi);
  const double gravity = p.gravity_sign * p.m * z.q(2, 2);
  const double electric = p.charge * p.beta *
                          (1.0 / charge_offset(p, z.q, +1).norm() -
                           1.0 / charge_offset(p, z.q, -1).norm());
  return kinetic + gravity + electric;
}

BigAlgebraElement<SO3> dipole_f(const DipoleParams& p, const CotangentPoint<SO3>& z) {
  // dH(exp(e eta) g, mu)/de = <grad, eta> with
  //   grad = xi x mu + s m (g e3) x e3 + q beta sum_+- +-(p x z) / |p - z|^3.
  const Eigen::Vector3d xi = angular_velocity(p, z);
  const Eigen::Vector3d e3 = Eigen::Vector3d::UnitZ();
  Eigen::Vector3d grad = xi.cross(z.mu) + p.gravity_sign * p.m * z.q.col(2).cross(e3);
  for (int sign : {+1, -1}) {
    const Eigen::Vector3d d = charge_offset(p, z.q, sign);
    const Eigen::Vector3d pos = d + p.field_charge_pos;
    const double r = d.norm();
    grad += sign * p.charge * p.beta * pos.cross(p.field_charge_pos) / (r * r * r);
  }
  return {xi, -grad};
}

CotangentPoint<SO3> dipole_preset_initial_state(const DipoleParams& p) {
  Eigen::Matrix3d g0;
  g0 << 1.0, 0.0, 0.0,
        0.0, 0.0, -1.0,
        0.0, 1.0, 0.0;
  return {g0, g0 * p.inertia() * g0.transpose() * Eigen::Vector3d::UnitY()};
}

DipoleSystem::DipoleSystem(DipoleParams params) : params_(std::move(params)) {
  params_.validate();
}

BigAlgebraElement<SO3> DipoleSystem::f(const CotangentPoint<SO3>& z) const {
  return dipole_f(params_, z);
}

double DipoleSystem::energy(const CotangentPoint<SO3>& z) const {
  return dipole_energy(params_, z);
}

}  // namespace symlie
