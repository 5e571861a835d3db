#pragma once

#include <Eigen/Dense>

namespace symlie {

/// Skew-symmetric matrix of the cross product, hat(v) * w == v x w.
Eigen::Matrix3d hat(const Eigen::Vector3d& v);

/// Inverse of hat. Throws InvalidInput if ||m + m^T||_inf > 1e-12.
Eigen::Vector3d vee(const Eigen::Matrix3d& m);

/// The rotation group with so(3) identified with R^3 (bracket = cross
/// product) and so(3)* identified with R^3 through the dot product.
///
/// Tangent vectors are right-trivialized: a curve g(t) has velocity
/// xi * g with xi in the algebra. dexp follows the same convention,
/// d/dt exp(x(t)) = dexp_x(x'(t)) * exp(x(t)).
///
/// Everything is evaluated in closed form; Taylor expansions take over
/// for angles below kSeriesThreshold.
struct SO3 {
  using Algebra = Eigen::Vector3d;
  using Dual = Eigen::Vector3d;
  using Element = Eigen::Matrix3d;

  static constexpr double kSeriesThreshold = 1e-4;
  // log and dexp are refused this close to their singular angles.
  static constexpr double kBranchMargin = 1e-6;

  static constexpr int dim() { return 3; }
  static Algebra zero_algebra() { return Algebra::Zero(); }
  static Dual zero_dual() { return Dual::Zero(); }
  static Element identity() { return Element::Identity(); }

  static Element multiply(const Element& g, const Element& h) { return g * h; }
  static Element inverse(const Element& g) { return g.transpose(); }

  static double pairing(const Dual& mu, const Algebra& x) { return mu.dot(x); }

  static Algebra bracket(const Algebra& x, const Algebra& y) { return x.cross(y); }
  /// <ad_star(x, mu), y> = <mu, [x, y]>
  static Dual ad_star(const Algebra& x, const Dual& mu) { return mu.cross(x); }

  static Element exp(const Algebra& x);
  /// Principal branch. Throws BranchCut for angles >= pi - kBranchMargin.
  static Algebra log(const Element& g);

  static Algebra Ad(const Element& g, const Algebra& x) { return g * x; }
  /// <Ad_star(g, mu), x> = <mu, Ad(g, x)>
  static Dual Ad_star(const Element& g, const Dual& mu) { return g.transpose() * mu; }

  // The closed forms are valid for ||x|| < 2 pi; closer than kBranchMargin
  // to that radius they throw BranchCut.
  static Algebra dexp(const Algebra& x, const Algebra& y);
  static Algebra dexpinv(const Algebra& x, const Algebra& y);
  static Dual dexp_star(const Algebra& x, const Dual& mu);
  static Dual dexpinv_star(const Algebra& x, const Dual& mu);

  /// Matrix of dexp_x in the coordinate basis.
  static Eigen::Matrix3d dexp_matrix(const Algebra& x);
  static Eigen::Matrix3d dexpinv_matrix(const Algebra& x);

  static double distance(const Element& a, const Element& b);
};

}  // namespace symlie
