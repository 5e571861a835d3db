#pragma once

#include <array>
#include <concepts>
#include <string>

#include "symlie/error.hpp"

namespace symlie {

/// Capability record for a matrix-free Lie group instance. SO3 and Abelian
/// model it; the integrators are written against this concept only.
template <class G>
concept LieGroup = requires(const G& grp, const typename G::Algebra& x,
                            const typename G::Dual& mu,
                            const typename G::Element& g) {
  { grp.dim() } -> std::convertible_to<int>;
  { grp.zero_algebra() } -> std::convertible_to<typename G::Algebra>;
  { grp.zero_dual() } -> std::convertible_to<typename G::Dual>;
  { grp.identity() } -> std::convertible_to<typename G::Element>;
  { grp.multiply(g, g) } -> std::convertible_to<typename G::Element>;
  { grp.inverse(g) } -> std::convertible_to<typename G::Element>;
  { grp.pairing(mu, x) } -> std::convertible_to<double>;
  { grp.bracket(x, x) } -> std::convertible_to<typename G::Algebra>;
  { grp.ad_star(x, mu) } -> std::convertible_to<typename G::Dual>;
  { grp.exp(x) } -> std::convertible_to<typename G::Element>;
  { grp.log(g) } -> std::convertible_to<typename G::Algebra>;
  { grp.Ad(g, x) } -> std::convertible_to<typename G::Algebra>;
  { grp.Ad_star(g, mu) } -> std::convertible_to<typename G::Dual>;
  { grp.dexp(x, x) } -> std::convertible_to<typename G::Algebra>;
  { grp.dexpinv(x, x) } -> std::convertible_to<typename G::Algebra>;
  { grp.dexp_star(x, mu) } -> std::convertible_to<typename G::Dual>;
  { grp.dexpinv_star(x, mu) } -> std::convertible_to<typename G::Dual>;
  { grp.distance(g, g) } -> std::convertible_to<double>;
};

inline constexpr int kMaxCutoff = 6;

struct Rational {
  long long num;
  long long den;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// B_0 .. B_6 with the B_1 = -1/2 convention.
inline constexpr std::array<Rational, kMaxCutoff + 1> kBernoulli{{
    {1, 1}, {-1, 2}, {1, 6}, {0, 1}, {-1, 30}, {0, 1}, {1, 42}}};

/// B_k / k!, the coefficient of ad_x^k in the series of dexpinv_x.
double dexpinv_series_coefficient(int k);

namespace detail {
inline void check_cutoff(int r) {
  if (r < 0 || r > kMaxCutoff) {
    fail(ErrorKind::InvalidInput,
         "cut-off r = " + std::to_string(r) + " outside 0.." + std::to_string(kMaxCutoff));
  }
}
}  // namespace detail

/// Degree-r Taylor truncation of dexpinv_x applied to y:
///   y - 1/2 [x, y] + sum_{k=2}^{r} B_k / k! ad_x^k y,  and just y for r = 0.
template <LieGroup G>
typename G::Algebra dexpinv_trunc(const G& grp, int r, const typename G::Algebra& x,
                                  const typename G::Algebra& y) {
  detail::check_cutoff(r);
  typename G::Algebra out = y;
  typename G::Algebra term = y;
  for (int k = 1; k <= r; ++k) {
    term = grp.bracket(x, term);
    const double coef = dexpinv_series_coefficient(k);
    if (coef != 0.0) out += coef * term;
  }
  return out;
}

/// Adjoint of dexpinv_trunc in its second argument: (ad_x^k)* = (ad*_x)^k.
template <LieGroup G>
typename G::Dual dexpinv_trunc_star(const G& grp, int r, const typename G::Algebra& x,
                                    const typename G::Dual& mu) {
  detail::check_cutoff(r);
  typename G::Dual out = mu;
  typename G::Dual term = mu;
  for (int k = 1; k <= r; ++k) {
    term = grp.ad_star(x, term);
    const double coef = dexpinv_series_coefficient(k);
    if (coef != 0.0) out += coef * term;
  }
  return out;
}

/// P*_(r)(x, xi) mu: the adjoint of the x-derivative of dexpinv_trunc(r, x, xi),
/// applied to mu.
///   P*_(r) = 1/2 ad*_xi - sum_{k=2}^{r} B_k/k! sum_{i=0}^{k-1} ad*_{ad_x^i xi} (ad*_x)^{k-i-1}
template <LieGroup G>
typename G::Dual p_star_poly(const G& grp, int r, const typename G::Algebra& x,
                             const typename G::Algebra& xi, const typename G::Dual& mu) {
  detail::check_cutoff(r);
  if (r == 0) return grp.zero_dual();

  typename G::Dual out = 0.5 * grp.ad_star(xi, mu);
  if (r == 1) return out;

  // powers_mu[j] = (ad*_x)^j mu, ad_xi[i] = ad_x^i xi
  std::array<typename G::Dual, kMaxCutoff> powers_mu;
  std::array<typename G::Algebra, kMaxCutoff> ad_xi;
  powers_mu[0] = mu;
  ad_xi[0] = xi;
  for (int j = 1; j < r; ++j) {
    powers_mu[j] = grp.ad_star(x, powers_mu[j - 1]);
    ad_xi[j] = grp.bracket(x, ad_xi[j - 1]);
  }
  for (int k = 2; k <= r; ++k) {
    const double coef = dexpinv_series_coefficient(k);
    if (coef == 0.0) continue;
    for (int i = 0; i < k; ++i) {
      out -= coef * grp.ad_star(ad_xi[i], powers_mu[k - i - 1]);
    }
  }
  return out;
}

}  // namespace symlie
