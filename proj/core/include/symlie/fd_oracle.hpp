#pragma once

#include <functional>

#include "symlie/cotangent.hpp"

namespace symlie {

/// Central-difference approximation of f = (D2 H, -(D1 H) . q^-1) from an
/// energy evaluator alone. Only meant as a test oracle for analytic f-maps.
template <LieGroup G>
BigAlgebraElement<G> fd_f_from_energy(
    const G& grp, const std::function<double(const CotangentPoint<G>&)>& energy,
    const CotangentPoint<G>& z, double step = 1e-6) {
  BigAlgebraElement<G> out{grp.zero_algebra(), grp.zero_dual()};
  for (int k = 0; k < grp.dim(); ++k) {
    const auto e = algebra_basis(grp, k);
    const auto de = dual_basis(grp, k);
    const double hp = energy({z.q, z.mu + step * de});
    const double hm = energy({z.q, z.mu - step * de});
    out.xi(k) = (hp - hm) / (2.0 * step);
    const double gp = energy({grp.multiply(grp.exp(step * e), z.q), z.mu});
    const double gm = energy({grp.multiply(grp.exp(-step * e), z.q), z.mu});
    out.nu(k) = -(gp - gm) / (2.0 * step);
  }
  return out;
}

}  // namespace symlie
