#include "symlie/abelian.hpp"

#include <string>

#include "symlie/error.hpp"

namespace symlie {

Abelian::Abelian(int n) : n_(n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "abelian group dimension must be >= 1");
}

void Abelian::check(const Eigen::VectorXd& v, const char* what) const {
  if (v.size() != n_) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": expected dimension " +
                                      std::to_string(n_) + ", got " +
                                      std::to_string(v.size()));
  }
}

Abelian::Element Abelian::multiply(const Element& g, const Element& h) const {
  check(g, "multiply");
  check(h, "multiply");
  return g + h;
}

Abelian::Element Abelian::inverse(const Element& g) const {
  check(g, "inverse");
  return -g;
}

double Abelian::pairing(const Dual& mu, const Algebra& x) const {
  check(mu, "pairing");
  check(x, "pairing");
  return mu.dot(x);
}

Abelian::Algebra Abelian::bracket(const Algebra& x, const Algebra& y) const {
  check(x, "bracket");
  check(y, "bracket");
  return zero_algebra();
}

Abelian::Dual Abelian::ad_star(const Algebra& x, const Dual& mu) const {
  check(x, "ad_star");
  check(mu, "ad_star");
  return zero_dual();
}

Abelian::Element Abelian::exp(const Algebra& x) const {
  check(x, "exp");
  return x;
}

Abelian::Algebra Abelian::log(const Element& g) const {
  check(g, "log");
  return g;
}

Abelian::Algebra Abelian::Ad(const Element& g, const Algebra& x) const {
  check(g, "Ad");
  check(x, "Ad");
  return x;
}

Abelian::Dual Abelian::Ad_star(const Element& g, const Dual& mu) const {
  check(g, "Ad_star");
  check(mu, "Ad_star");
  return mu;
}

Abelian::Algebra Abelian::dexp(const Algebra& x, const Algebra& y) const {
  check(x, "dexp");
  check(y, "dexp");
  return y;
}

Abelian::Algebra Abelian::dexpinv(const Algebra& x, const Algebra& y) const {
  check(x, "dexpinv");
  check(y, "dexpinv");
  return y;
}

Abelian::Dual Abelian::dexp_star(const Algebra& x, const Dual& mu) const {
  check(x, "dexp_star");
  check(mu, "dexp_star");
  return mu;
}

Abelian::Dual Abelian::dexpinv_star(const Algebra& x, const Dual& mu) const {
  check(x, "dexpinv_star");
  check(mu, "dexpinv_star");
  return mu;
}

double Abelian::distance(const Element& a, const Element& b) const {
  return (a - b).norm();
}

}  // namespace symlie
