#include "symlie/symplecticity.hpp"

#include "symlie/vrkmk.hpp"

namespace symlie {

CalibrationReport calibrate_two_form_sign(double fp_tol) {
  const DipoleSystem sys;
  const auto z0 = dipole_preset_initial_state(sys.params());
  StepConfig cfg;
  cfg.h = 1e-3;
  cfg.fp_tol = fp_tol;
  cfg.fp_max_iter = 200;
  const ButcherTableau t = gauss_tableau(2);
  StepMap<SO3> map = [&](const CotangentPoint<SO3>& z) { return vrkmk_step(sys, z, cfg, t).z; };

  CalibrationReport rep;
  rep.defect_plus = symplectic_defect(sys.group(), map, z0, +1).defect;
  rep.defect_minus = symplectic_defect(sys.group(), map, z0, -1).defect;
  const bool plus = rep.defect_plus <= kCalibrationThreshold;
  const bool minus = rep.defect_minus <= kCalibrationThreshold;
  if (plus != minus) rep.sign = plus ? +1 : -1;
  return rep;
}

}  // namespace symlie
