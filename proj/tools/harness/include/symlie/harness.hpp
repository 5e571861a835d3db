#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlie/dipole.hpp"
#include "symlie/integrate.hpp"

namespace symlie::harness {

enum class Problem { Dipole, Nonregular, AbelianOscillator };

std::string_view to_string(Problem p);
Problem problem_from_string(std::string_view id);

struct ExperimentConfig {
  Problem problem = Problem::Dipole;
  Method method = Method::Vrkmk;
  /// Replaces the step by the non-variational control (RKMK group step,
  /// explicit Euler momentum). Only meaningful for symplecticity checks.
  bool euler_control = false;
  std::string tableau = "gauss2";
  std::optional<int> cutoff_r;

  // Order study: h_list, or h_min/h_max/h_count if h_list is empty.
  std::vector<double> h_list;
  double h_min = 1e-3;
  double h_max = 1e-1;
  int h_count = 12;
  /// Error in q only (used for the order barrier).
  bool q_only_error = false;

  // Long run / symplecticity.
  double h = 0.01;
  int n_steps = 0;  // 0: derived from t_end
  double t_end = 0.5;
  int stride = 0;   // 0: thin to at most kMaxLongRunRows rows

  double fp_tol = 1e-14;
  int fp_max_iter = 100;

  DipoleParams dipole;
  std::string out;

  StepConfig step_config(double step) const;
  /// Throws InvalidInput on inconsistent settings.
  void validate() const;
};

/// Installs the reference dipole data (m = q = beta = 1, alpha = 0.1).
/// Throws InvalidInput for unknown names.
void apply_preset(ExperimentConfig& cfg, std::string_view name);

/// count log-spaced step sizes in [h_min, h_max], each nudged to t_end / N
/// for integer N, strictly decreasing and without duplicates.
std::vector<double> log_spaced_steps(double h_min, double h_max, int count, double t_end);

inline constexpr double kReferenceStep = 1e-3;
inline constexpr int kMaxLongRunRows = 10000;
inline constexpr double kSymplecticThreshold = 1e-6;

struct OrderRow {
  double h = 0.0;
  double error = 0.0;       // NaN if the solve failed
  double iterations = 0.0;  // mean fixed-point sweeps per step
  double slope_local = 0.0; // NaN for the first row
  double noise_floor = 0.0; // max(100, 10 N) fp_tol for N steps
  std::string failure;      // empty on success
};

struct OrderStudyResult {
  std::vector<OrderRow> rows;
  double slope = 0.0;  // NaN if fewer than two points qualify
  int fitted_points = 0;
};

/// Integrates to t_end for each h and compares with VRKMK Gauss-3 (r = 4)
/// at h = 1e-3; for rkmk/cg the reference is RKMK Gauss-3 on the same
/// frozen-momentum field. Error is |mu - mu_ref|_2 + |q - q_ref|_2, or the
/// q term alone. Rows below max(100, 10 N) fp_tol are taken as noise; the
/// slope is a least squares fit over the decade of h above the smallest
/// remaining step size.
OrderStudyResult run_order_study(const ExperimentConfig& cfg);

struct LongRunRow {
  double t = 0.0;
  double dH = 0.0;
};

struct LongRunResult {
  std::vector<LongRunRow> rows;  // thinned by stride, last step always kept
  int n_steps = 0;
  int stride = 1;
  double h0 = 0.0;
  double max_abs_dH = 0.0;
  double first_tenth_max = 0.0;
  double last_tenth_max = 0.0;
  double orthogonality_defect = 0.0;  // |q^T q - I|_inf at the end (0 if abelian)
  double mean_iterations = 0.0;
};

/// Errors from the solver are fatal here.
LongRunResult run_longrun(const ExperimentConfig& cfg);

struct SymplecticityResult {
  double defect = 0.0;
  double threshold = kSymplecticThreshold;
  int sign = 0;
  bool pass() const { return defect <= threshold; }
};

/// One step of size cfg.h from the problem's initial data. Throws
/// CalibrationMissing if the two-form sign has not been calibrated.
SymplecticityResult run_symplecticity_check(const ExperimentConfig& cfg);

/// 17 significant digits, '.' decimal separator; nan/inf spelled out.
std::string format_double(double v);

/// Writes header and rows, newline-terminated. Throws Io with the path.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::vector<std::vector<double>> order_rows(const OrderStudyResult& r);
std::vector<std::vector<double>> longrun_rows(const LongRunResult& r);

}  // namespace symlie::harness
