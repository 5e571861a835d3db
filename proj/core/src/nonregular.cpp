#include "symlie/nonregular.hpp"

namespace symlie {

namespace {

Eigen::Vector3d skew_part_vee(const Eigen::Matrix3d& m) {
  return vee(0.5 * (m - m.transpose()));
}

}  // namespace

Eigen::Matrix3d NonregularSystem::default_matrix() {
  Eigen::Matrix3d a;
  a << 1.0, 2.0, 3.0,
       4.0, 5.0, 6.0,
       7.0, 8.0, 9.0;
  return a / 10.0;
}

NonregularSystem::NonregularSystem(Eigen::Matrix3d a) : a_(std::move(a)) {}

Eigen::Vector3d NonregularSystem::v(const Eigen::Matrix3d& g) const {
  return skew_part_vee(a_ * g);
}

// v is linear in g, so the derivative along eta . g is exact.
Eigen::Vector3d NonregularSystem::dv(const Eigen::Matrix3d& g, const Eigen::Vector3d& eta) const {
  return skew_part_vee(a_ * hat(eta) * g);
}

BigAlgebraElement<SO3> NonregularSystem::f(const CotangentPoint<SO3>& z) const {
  Eigen::Vector3d n;
  for (int k = 0; k < 3; ++k) n(k) = -z.mu.dot(dv(z.q, Eigen::Vector3d::Unit(k)));
  return {v(z.q), n};
}

double NonregularSystem::energy(const CotangentPoint<SO3>& z) const {
  return z.mu.dot(v(z.q));
}

BigAlgebraElement<SO3> nonregular_f(const Eigen::Matrix3d& a, const CotangentPoint<SO3>& z) {
  return NonregularSystem(a).f(z);
}

}  // namespace symlie
