#include "symlie/so3.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "symlie/error.hpp"

namespace symlie {

Eigen::Matrix3d hat(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v(2), v(1),
       v(2), 0.0, -v(0),
       -v(1), v(0), 0.0;
  return m;
}

Eigen::Vector3d vee(const Eigen::Matrix3d& m) {
  const double asym = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12)) {
    std::ostringstream os;
    os << "vee of a non-skew matrix (||m + m^T||_inf = " << asym << ")";
    fail(ErrorKind::InvalidInput, os.str());
  }
  return {m(2, 1), m(0, 2), m(1, 0)};
}

namespace {

// (1 - cos t) / t^2 and (t - sin t) / t^3.
struct DexpCoefficients {
  double c1;
  double c2;
};

DexpCoefficients dexp_coefficients(double theta) {
  if (theta < SO3::kSeriesThreshold) {
    const double t2 = theta * theta;
    return {0.5 - t2 / 24.0 + t2 * t2 / 720.0,
            1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0};
  }
  const double half_sin = std::sin(0.5 * theta);
  const double t2 = theta * theta;
  return {2.0 * half_sin * half_sin / t2, (theta - std::sin(theta)) / (t2 * theta)};
}

// (1 - (t/2) cot(t/2)) / t^2
double dexpinv_coefficient(double theta) {
  const double t2 = theta * theta;
  if (theta < SO3::kSeriesThreshold) {
    return 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
  }
  const double half = 0.5 * theta;
  return (1.0 - half * std::cos(half) / std::sin(half)) / t2;
}

void check_dexp_branch(double theta) {
  if (!(theta < 2.0 * std::numbers::pi - SO3::kBranchMargin)) {
    std::ostringstream os;
    os << "dexp closed form requested at ||x|| = " << theta << " (limit 2 pi)";
    fail(ErrorKind::BranchCut, os.str());
  }
}

}  // namespace

SO3::Element SO3::exp(const Algebra& x) {
  const double theta = x.norm();
  const Eigen::Matrix3d a = hat(x);
  double s;  // sin t / t
  double c;  // (1 - cos t) / t^2
  if (theta < kSeriesThreshold) {
    const double t2 = theta * theta;
    s = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    c = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    const double half_sin = std::sin(0.5 * theta);
    s = std::sin(theta) / theta;
    c = 2.0 * half_sin * half_sin / (theta * theta);
  }
  return Element::Identity() + s * a + c * a * a;
}

SO3::Algebra SO3::log(const Element& g) {
  const Eigen::Vector3d axis2 = vee(g - g.transpose());  // 2 sin(t) * axis
  const double sin2 = axis2.norm();
  const double cos2 = g.trace() - 1.0;  // 2 cos(t)
  const double theta = std::atan2(sin2, cos2);
  if (!(theta < std::numbers::pi - kBranchMargin)) {
    std::ostringstream os;
    os << "log of a rotation by " << theta << " rad (principal branch only)";
    fail(ErrorKind::BranchCut, os.str());
  }
  double factor;  // t / (2 sin t)
  if (theta < kSeriesThreshold) {
    const double t2 = theta * theta;
    factor = 0.5 * (1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0);
  } else {
    factor = theta / sin2;
  }
  return factor * axis2;
}

Eigen::Matrix3d SO3::dexp_matrix(const Algebra& x) {
  const double theta = x.norm();
  check_dexp_branch(theta);
  const auto [c1, c2] = dexp_coefficients(theta);
  const Eigen::Matrix3d a = hat(x);
  return Eigen::Matrix3d::Identity() + c1 * a + c2 * a * a;
}

Eigen::Matrix3d SO3::dexpinv_matrix(const Algebra& x) {
  const double theta = x.norm();
  check_dexp_branch(theta);
  const Eigen::Matrix3d a = hat(x);
  return Eigen::Matrix3d::Identity() - 0.5 * a + dexpinv_coefficient(theta) * a * a;
}

// The vector forms avoid building matrices: a y = x cross y.
SO3::Algebra SO3::dexp(const Algebra& x, const Algebra& y) {
  const double theta = x.norm();
  check_dexp_branch(theta);
  const auto [c1, c2] = dexp_coefficients(theta);
  const Eigen::Vector3d xy = x.cross(y);
  return y + c1 * xy + c2 * x.cross(xy);
}

SO3::Algebra SO3::dexpinv(const Algebra& x, const Algebra& y) {
  const double theta = x.norm();
  check_dexp_branch(theta);
  const Eigen::Vector3d xy = x.cross(y);
  return y - 0.5 * xy + dexpinv_coefficient(theta) * x.cross(xy);
}

// hat(x)^T = -hat(x), so the transposes flip the odd terms.
SO3::Dual SO3::dexp_star(const Algebra& x, const Dual& mu) {
  return dexp(-x, mu);
}

SO3::Dual SO3::dexpinv_star(const Algebra& x, const Dual& mu) {
  return dexpinv(-x, mu);
}

double SO3::distance(const Element& a, const Element& b) {
  // Spectral norm, the matrix norm subordinate to the Euclidean one.
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(a - b);
  return svd.singularValues()(0);
}

}  // namespace symlie
