#pragma once

#include <Eigen/Dense>

#include "symlie/lie_group.hpp"

namespace symlie {

/// Right-trivialized phase point (q, mu) in G x g*.
template <LieGroup G>
struct CotangentPoint {
  typename G::Element q;
  typename G::Dual mu;
};

/// Element (xi, nu) of the algebra g x g* of G x g*. Systems return their
/// vector field in this form: z' = f(z) . z.
template <LieGroup G>
struct BigAlgebraElement {
  typename G::Algebra xi;
  typename G::Dual nu;
};

/// Tangent vector at (q, mu) stored trivialized as (dq q^-1, dmu).
template <LieGroup G>
struct TangentVector {
  typename G::Algebra eta;
  typename G::Dual rho;
};

template <LieGroup G>
typename G::Algebra algebra_basis(const G& grp, int k) {
  typename G::Algebra e = grp.zero_algebra();
  e(k) = 1.0;
  return e;
}

template <LieGroup G>
typename G::Dual dual_basis(const G& grp, int k) {
  typename G::Dual e = grp.zero_dual();
  e(k) = 1.0;
  return e;
}

template <LieGroup G>
CotangentPoint<G> ct_identity(const G& grp) {
  return {grp.identity(), grp.zero_dual()};
}

/// (g, mu)(h, nu) = (g h, mu + Ad*_{g^-1} nu)
template <LieGroup G>
CotangentPoint<G> ct_product(const G& grp, const CotangentPoint<G>& a,
                             const CotangentPoint<G>& b) {
  return {grp.multiply(a.q, b.q), a.mu + grp.Ad_star(grp.inverse(a.q), b.mu)};
}

/// (g, mu)^-1 = (g^-1, -Ad*_g mu)
template <LieGroup G>
CotangentPoint<G> ct_inverse(const G& grp, const CotangentPoint<G>& z) {
  return {grp.inverse(z.q), -grp.Ad_star(z.q, z.mu)};
}

/// [(xi, mu), (eta, nu)] = (ad_xi eta, ad*_eta mu - ad*_xi nu)
template <LieGroup G>
BigAlgebraElement<G> big_bracket(const G& grp, const BigAlgebraElement<G>& a,
                                 const BigAlgebraElement<G>& b) {
  return {grp.bracket(a.xi, b.xi), grp.ad_star(b.xi, a.nu) - grp.ad_star(a.xi, b.nu)};
}

/// TR_z zeta = (eta . q, nu - ad*_eta mu), returned in trivialized form.
template <LieGroup G>
TangentVector<G> right_translate(const G& grp, const CotangentPoint<G>& z,
                                 const BigAlgebraElement<G>& zeta) {
  return {zeta.xi, zeta.nu - grp.ad_star(zeta.xi, z.mu)};
}

/// Canonical two-form at z on trivialized tangent vectors,
///   <rho2, eta1> - <rho1, eta2> + sign <mu, [eta1, eta2]>.
/// The sign is a convention fixed by calibration (see two_form_sign.hpp).
template <LieGroup G>
double two_form(const G& grp, const CotangentPoint<G>& z, const TangentVector<G>& t1,
                const TangentVector<G>& t2, int sign) {
  return grp.pairing(t2.rho, t1.eta) - grp.pairing(t1.rho, t2.eta) +
         sign * grp.pairing(z.mu, grp.bracket(t1.eta, t2.eta));
}

/// Basis vector k of the 2n-dimensional trivialized tangent space:
/// k < n moves q, k >= n moves mu.
template <LieGroup G>
TangentVector<G> tangent_basis(const G& grp, int k) {
  const int n = grp.dim();
  if (k < n) return {algebra_basis(grp, k), grp.zero_dual()};
  return {grp.zero_algebra(), dual_basis(grp, k - n)};
}

/// Matrix of two_form at z in the tangent_basis frame.
template <LieGroup G>
Eigen::MatrixXd two_form_matrix(const G& grp, const CotangentPoint<G>& z, int sign) {
  const int m = 2 * grp.dim();
  Eigen::MatrixXd omega(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      omega(a, b) = two_form(grp, z, tangent_basis(grp, a), tangent_basis(grp, b), sign);
    }
  }
  return omega;
}

}  // namespace symlie
