#include "symlie/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "symlie/abelian_systems.hpp"
#include "symlie/nonregular.hpp"
#include "symlie/symplecticity.hpp"

namespace symlie::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double manifold_defect(const Eigen::Matrix3d& q) {
  return (q.transpose() * q - Eigen::Matrix3d::Identity()).cwiseAbs().rowwise().sum().maxCoeff();
}
double manifold_defect(const Eigen::VectorXd&) { return 0.0; }

// Calls fn(system, initial point) for the configured problem.
template <class Fn>
auto with_problem(const ExperimentConfig& cfg, Fn&& fn) {
  switch (cfg.problem) {
    case Problem::Dipole: {
      const DipoleSystem sys(cfg.dipole);
      return fn(sys, dipole_preset_initial_state(cfg.dipole));
    }
    case Problem::Nonregular: {
      const NonregularSystem sys;
      const CotangentPoint<SO3> z0{dipole_preset_initial_state(cfg.dipole).q,
                                   Eigen::Vector3d(0.1, 0.2, 0.3)};
      return fn(sys, z0);
    }
    case Problem::AbelianOscillator: {
      const AbelianOscillator sys(1);
      const CotangentPoint<Abelian> z0{Eigen::VectorXd::Ones(1), Eigen::VectorXd::Zero(1)};
      return fn(sys, z0);
    }
  }
  fail(ErrorKind::InvalidInput, "unknown problem");
}

int steps_for(double t_end, double h) {
  return std::max(1, static_cast<int>(std::lround(t_end / h)));
}

// Runs n steps and returns the end point and the mean sweep count.
template <LieGroup G>
std::pair<CotangentPoint<G>, double> run_to_end(const TrivializedSystem<G>& sys,
                                                const CotangentPoint<G>& z0,
                                                const StepConfig& sc, const ButcherTableau& t,
                                                Method m, int n) {
  long total = 0;
  auto end = integrate_visit(sys, z0, sc, t, m, n,
                             [&](const StepRecord& rec, const CotangentPoint<G>&) {
                               total += rec.iterations;
                             });
  return {std::move(end), static_cast<double>(total) / n};
}

double row_floor(double fp_tol, double t_end, double h) {
  return std::max(100.0 * fp_tol, 10.0 * steps_for(t_end, h) * fp_tol);
}

// Least squares slope of log error against log h over the decade of step
// sizes above the smallest h whose error clears its noise floor.
double fit_slope(const std::vector<OrderRow>& rows, double fp_tol, double t_end, int& used) {
  auto clears = [&](const OrderRow& r) {
    return std::isfinite(r.error) && r.error >= row_floor(fp_tol, t_end, r.h);
  };
  double h_small = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (clears(r)) h_small = std::min(h_small, r.h);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  used = 0;
  for (const auto& r : rows) {
    if (!clears(r) || r.h > 10.0 * h_small * (1.0 + 1e-12)) continue;
    const double x = std::log(r.h), y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  if (used < 2) return kNaN;
  return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

}  // namespace

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::Dipole: return "dipole";
    case Problem::Nonregular: return "nonregular";
    case Problem::AbelianOscillator: return "abelian-oscillator";
  }
  return "?";
}

Problem problem_from_string(std::string_view id) {
  for (Problem p : {Problem::Dipole, Problem::Nonregular, Problem::AbelianOscillator}) {
    if (to_string(p) == id) return p;
  }
  fail(ErrorKind::InvalidInput, "unknown problem '" + std::string(id) + "'");
}

StepConfig ExperimentConfig::step_config(double step) const {
  StepConfig sc;
  sc.h = step;
  sc.fp_tol = fp_tol;
  sc.fp_max_iter = fp_max_iter;
  sc.cutoff_r = cutoff_r;
  return sc;
}

void ExperimentConfig::validate() const {
  if ((method == Method::Sprk) != (problem == Problem::AbelianOscillator)) {
    fail(ErrorKind::InvalidInput, "sprk runs on, and only on, the abelian-oscillator problem");
  }
  if (!(t_end > 0.0)) fail(ErrorKind::InvalidInput, "t_end must be positive");
  if (!(h > 0.0)) fail(ErrorKind::InvalidInput, "h must be positive");
  if (n_steps < 0 || stride < 0) fail(ErrorKind::InvalidInput, "steps and stride must be >= 0");
  if (cutoff_r) detail::check_cutoff(*cutoff_r);
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0.0) || (i > 0 && !(h_list[i] < h_list[i - 1]))) {
      fail(ErrorKind::InvalidInput, "h list must be positive and strictly decreasing");
    }
  }
  tableau_by_id(tableau);
  step_config(h).validate();
  dipole.validate();
}

void apply_preset(ExperimentConfig& cfg, std::string_view name) {
  if (name != "paper-dipole") fail(ErrorKind::InvalidInput, "unknown preset '" + std::string(name) + "'");
  cfg.problem = Problem::Dipole;
  cfg.dipole = DipoleParams{};
}

std::vector<double> log_spaced_steps(double h_min, double h_max, int count, double t_end) {
  if (!(h_min > 0.0) || !(h_max >= h_min) || count < 1 || !(t_end > 0.0)) {
    fail(ErrorKind::InvalidInput, "need 0 < h_min <= h_max, count >= 1, t_end > 0");
  }
  std::vector<double> hs;
  for (int k = 0; k < count; ++k) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    const double h = h_max * std::pow(h_min / h_max, frac);
    const double adjusted = t_end / steps_for(t_end, h);
    if (hs.empty() || adjusted < hs.back()) hs.push_back(adjusted);
  }
  return hs;
}

OrderStudyResult run_order_study(const ExperimentConfig& cfg) {
  cfg.validate();
  return with_problem(cfg, [&](const auto& sys, const auto& z0) {
    const auto& grp = sys.group();
    const ButcherTableau t = tableau_by_id(cfg.tableau);
    const std::vector<double> hs =
        cfg.h_list.empty() ? log_spaced_steps(cfg.h_min, cfg.h_max, cfg.h_count, cfg.t_end)
                           : cfg.h_list;

    Method ref_method = Method::Vrkmk;
    if (cfg.method == Method::Rkmk || cfg.method == Method::Cg) ref_method = Method::Rkmk;
    if (cfg.method == Method::Sprk) ref_method = Method::Sprk;
    StepConfig rc = cfg.step_config(kReferenceStep);
    rc.cutoff_r = 4;
    rc.fp_max_iter = std::max(cfg.fp_max_iter, 200);
    const auto ref = run_to_end(sys, z0, rc, gauss_tableau(3), ref_method,
                                steps_for(cfg.t_end, kReferenceStep))
                         .first;

    OrderStudyResult res;
    for (double h : hs) {
      OrderRow row;
      row.h = h;
      row.noise_floor = row_floor(cfg.fp_tol, cfg.t_end, h);
      try {
        const auto [end, iters] =
            run_to_end(sys, z0, cfg.step_config(h), t, cfg.method, steps_for(cfg.t_end, h));
        row.error = grp.distance(end.q, ref.q);
        if (!cfg.q_only_error) row.error += (end.mu - ref.mu).norm();
        row.iterations = iters;
      } catch (const Error& e) {
        row.error = kNaN;
        row.iterations = kNaN;
        row.failure = e.what();
      }
      row.slope_local = kNaN;
      if (!res.rows.empty()) {
        const auto& prev = res.rows.back();
        row.slope_local = std::log(row.error / prev.error) / std::log(row.h / prev.h);
      }
      res.rows.push_back(std::move(row));
    }
    res.slope = fit_slope(res.rows, cfg.fp_tol, cfg.t_end, res.fitted_points);
    return res;
  });
}

LongRunResult run_longrun(const ExperimentConfig& cfg) {
  cfg.validate();
  return with_problem(cfg, [&](const auto& sys, const auto& z0) {
    if (!sys.has_energy()) fail(ErrorKind::InvalidInput, "problem has no energy");
    const ButcherTableau t = tableau_by_id(cfg.tableau);
    LongRunResult res;
    res.n_steps = cfg.n_steps > 0 ? cfg.n_steps : steps_for(cfg.t_end, cfg.h);
    res.stride = cfg.stride > 0 ? cfg.stride
                                : std::max(1, (res.n_steps + kMaxLongRunRows) / kMaxLongRunRows);
    res.h0 = sys.energy(z0);
    const int tenth = std::max(1, res.n_steps / 10);
    long total = 0;
    const auto end = integrate_visit(
        sys, z0, cfg.step_config(cfg.h), t, cfg.method, res.n_steps,
        [&](const StepRecord& rec, const auto& z) {
          const double dH = sys.energy(z) - res.h0;
          const double a = std::abs(dH);
          total += rec.iterations;
          res.max_abs_dH = std::max(res.max_abs_dH, a);
          if (rec.index >= 1 && rec.index <= tenth) res.first_tenth_max = std::max(res.first_tenth_max, a);
          if (rec.index > res.n_steps - tenth) res.last_tenth_max = std::max(res.last_tenth_max, a);
          if (rec.index % res.stride == 0 || rec.index == res.n_steps) {
            res.rows.push_back({rec.time, dH});
          }
        });
    res.orthogonality_defect = manifold_defect(end.q);
    res.mean_iterations = static_cast<double>(total) / res.n_steps;
    return res;
  });
}

SymplecticityResult run_symplecticity_check(const ExperimentConfig& cfg) {
  cfg.validate();
  SymplecticityResult res;
  res.sign = require_two_form_sign();
  res.defect = with_problem(cfg, [&](const auto& sys, const auto& z0) {
    using G = std::decay_t<decltype(sys.group())>;
    const ButcherTableau t = tableau_by_id(cfg.tableau);
    const StepConfig sc = cfg.step_config(cfg.h);
    StepMap<G> map = [&](const CotangentPoint<G>& z) {
      return cfg.euler_control ? euler_momentum_control_step(sys, z, sc, t)
                               : step(cfg.method, sys, z, sc, t).z;
    };
    return symplectic_defect(sys.group(), map, z0, res.sign).defect;
  });
  return res;
}

std::vector<std::vector<double>> order_rows(const OrderStudyResult& r) {
  std::vector<std::vector<double>> out;
  for (const auto& row : r.rows) out.push_back({row.h, row.error, row.iterations, row.slope_local});
  return out;
}

std::vector<std::vector<double>> longrun_rows(const LongRunResult& r) {
  std::vector<std::vector<double>> out;
  for (const auto& row : r.rows) out.push_back({row.t, row.dH});
  return out;
}

}  // namespace symlie::harness
