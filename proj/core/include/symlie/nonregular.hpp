#pragma once

#include <Eigen/Dense>

#include "symlie/so3.hpp"
#include "symlie/system.hpp"

namespace symlie {

/// H(q, mu) = <mu, v(q)> with v(g) = vee(skew(A g)). The Legendre map is
/// degenerate, and the q-dynamics q' = v(q) q does not see mu at all,
/// which isolates the group part of a variational method.
class NonregularSystem final : public TrivializedSystem<SO3> {
 public:
  /// A = [[1,2,3],[4,5,6],[7,8,9]] / 10
  static Eigen::Matrix3d default_matrix();

  explicit NonregularSystem(Eigen::Matrix3d a = default_matrix());

  const SO3& group() const override { return group_; }
  BigAlgebraElement<SO3> f(const CotangentPoint<SO3>& z) const override;
  bool has_energy() const override { return true; }
  double energy(const CotangentPoint<SO3>& z) const override;

  Eigen::Vector3d v(const Eigen::Matrix3d& g) const;
  /// d/de v(exp(e eta) g) at e = 0.
  Eigen::Vector3d dv(const Eigen::Matrix3d& g, const Eigen::Vector3d& eta) const;

  const Eigen::Matrix3d& matrix() const { return a_; }

 private:
  SO3 group_;
  Eigen::Matrix3d a_;
};

/// f(q, mu) = (v(q), -((dv/dq)* mu) . q^-1)
BigAlgebraElement<SO3> nonregular_f(const Eigen::Matrix3d& a, const CotangentPoint<SO3>& z);

}  // namespace symlie
