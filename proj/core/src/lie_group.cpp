#include "symlie/lie_group.hpp"

#include "symlie/error.hpp"

namespace symlie {

double dexpinv_series_coefficient(int k) {
  detail::check_cutoff(k);
  double factorial = 1.0;
  for (int j = 2; j <= k; ++j) factorial *= j;
  return kBernoulli[k].value() / factorial;
}

}  // namespace symlie
