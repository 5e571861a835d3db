#pragma once

#include <optional>

#include "symlie/error.hpp"

namespace symlie {

// Sign of the <mu, [eta1, eta2]> term in two_form(), as selected by
// calibrate_two_form_sign() (symplecticity.hpp). The calibration test
// re-derives it on every run.
inline constexpr std::optional<int> kTwoFormSign = -1;

inline int require_two_form_sign() {
  if (!kTwoFormSign) fail(ErrorKind::CalibrationMissing, "two-form sign not calibrated");
  return *kTwoFormSign;
}

}  // namespace symlie
