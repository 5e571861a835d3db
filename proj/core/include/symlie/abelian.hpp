#pragma once

#include <Eigen/Dense>

namespace symlie {

/// The additive group R^n. Its algebra is R^n with zero bracket, exp is the
/// identity on coordinates and every adjoint-type map is the identity.
/// Integrators applied on this group reduce to partitioned Runge-Kutta
/// methods, which is what the oracle tests lean on.
class Abelian {
 public:
  using Algebra = Eigen::VectorXd;
  using Dual = Eigen::VectorXd;
  using Element = Eigen::VectorXd;

  explicit Abelian(int n);

  int dim() const { return n_; }
  Algebra zero_algebra() const { return Algebra::Zero(n_); }
  Dual zero_dual() const { return Dual::Zero(n_); }
  Element identity() const { return Element::Zero(n_); }

  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;

  double pairing(const Dual& mu, const Algebra& x) const;

  Algebra bracket(const Algebra& x, const Algebra& y) const;
  Dual ad_star(const Algebra& x, const Dual& mu) const;

  Element exp(const Algebra& x) const;
  Algebra log(const Element& g) const;

  Algebra Ad(const Element& g, const Algebra& x) const;
  Dual Ad_star(const Element& g, const Dual& mu) const;

  Algebra dexp(const Algebra& x, const Algebra& y) const;
  Algebra dexpinv(const Algebra& x, const Algebra& y) const;
  Dual dexp_star(const Algebra& x, const Dual& mu) const;
  Dual dexpinv_star(const Algebra& x, const Dual& mu) const;

  double distance(const Element& a, const Element& b) const;

 private:
  void check(const Eigen::VectorXd& v, const char* what) const;

  int n_;
};

}  // namespace symlie
