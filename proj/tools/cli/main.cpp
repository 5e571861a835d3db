#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symlie/harness.hpp"

using namespace symlie;
using namespace symlie::harness;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;

struct Options {
  std::string problem = "dipole";
  std::string method = "vrkmk";
  std::string preset;
  int r = -1;
};

void add_common(CLI::App* sub, ExperimentConfig& cfg, Options& o) {
  sub->add_option("--problem", o.problem, "dipole | nonregular | abelian-oscillator")
      ->capture_default_str();
  sub->add_option("--method", o.method, "vrkmk | vcg | rkmk | cg | sprk | rkmk-euler")
      ->capture_default_str();
  sub->add_option("--tableau", cfg.tableau, "gauss1 gauss2 gauss3 midpoint kutta3 yoshida4 yoshida6")
      ->capture_default_str();
  sub->add_option("--r", o.r, "dexpinv cut-off override (0..6)");
  sub->add_option("--fp-tol", cfg.fp_tol, "fixed-point tolerance")->capture_default_str();
  sub->add_option("--fp-max-iter", cfg.fp_max_iter, "fixed-point sweep limit")->capture_default_str();
  sub->add_option("--preset", o.preset, "paper-dipole");
  sub->add_option("--out", cfg.out, "CSV output path");
}

void resolve(ExperimentConfig& cfg, const Options& o) {
  cfg.problem = problem_from_string(o.problem);
  if (o.method == "rkmk-euler") {
    cfg.method = Method::Rkmk;
    cfg.euler_control = true;
  } else {
    cfg.method = method_from_string(o.method);
  }
  if (o.r >= 0) cfg.cutoff_r = o.r;
  if (!o.preset.empty()) apply_preset(cfg, o.preset);
  cfg.validate();
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic Lie group integrators on T*SO(3): experiment driver"};
  app.require_subcommand(1);
  // --h is the step size, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  ExperimentConfig cfg;
  Options opt;

  auto* order = app.add_subcommand(
      "order-study",
      "Global error at --t-end against a Gauss-3 reference run at h = 1e-3.\n"
      "CSV columns: h,error,iterations,slope_local");
  add_common(order, cfg, opt);
  order->add_option("--h-min", cfg.h_min, "smallest step size")->capture_default_str();
  order->add_option("--h-max", cfg.h_max, "largest step size")->capture_default_str();
  order->add_option("--h-count", cfg.h_count, "log-spaced step sizes")->capture_default_str();
  order->add_option("--t-end", cfg.t_end, "integration interval")->capture_default_str();
  bool q_only = false;
  order->add_flag("--q-only", q_only, "measure the error in q only");

  auto* longrun = app.add_subcommand(
      "longrun", "Energy error along a long trajectory.\nCSV columns: t,dH");
  add_common(longrun, cfg, opt);
  longrun->add_option("--h", cfg.h, "step size")->capture_default_str();
  longrun->add_option("--steps", cfg.n_steps, "number of steps (default t-end / h)");
  longrun->add_option("--t-end", cfg.t_end, "integration interval")->capture_default_str();
  longrun->add_option("--stride", cfg.stride, "row stride (default: at most 10000 rows)");

  auto* sympl = app.add_subcommand(
      "symplecticity",
      "Finite-difference symplecticity defect of one step.\n"
      "CSV columns: h,defect,threshold,pass");
  add_common(sympl, cfg, opt);
  sympl->add_option("--h", cfg.h, "step size")->capture_default_str();

  auto* dump = app.add_subcommand("tableau-dump", "Print a Butcher tableau and its order conditions");
  dump->add_option("--tableau", cfg.tableau)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dump) {
      const ButcherTableau t = tableau_by_id(cfg.tableau);
      std::cout << format_tableau(t);
      const OrderReport rep = check_order_conditions(t, 3);
      std::cout << "order conditions: p1 " << rep.order1 << " p2 " << rep.order2 << " p3 "
                << rep.order3 << "\n";
      return 0;
    }
    cfg.q_only_error = q_only;
    resolve(cfg, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*order) {
      const auto res = run_order_study(cfg);
      if (!cfg.out.empty()) {
        write_csv(cfg.out, {"h", "error", "iterations", "slope_local"}, order_rows(res));
      }
      for (const auto& row : res.rows) {
        std::cout << fmt(row.h) << "  " << fmt(row.error) << "  " << fmt(row.iterations);
        if (!row.failure.empty()) std::cout << "  (" << row.failure << ")";
        std::cout << "\n";
      }
      std::cout << "slope " << fmt(res.slope) << " over " << res.fitted_points << " points\n";
    } else if (*longrun) {
      const auto res = run_longrun(cfg);
      if (!cfg.out.empty()) write_csv(cfg.out, {"t", "dH"}, longrun_rows(res));
      std::cout << "steps " << res.n_steps << " max|dH| " << fmt(res.max_abs_dH)
                << " first10% " << fmt(res.first_tenth_max) << " last10% "
                << fmt(res.last_tenth_max) << " orthogonality " << fmt(res.orthogonality_defect)
                << "\n";
    } else if (*sympl) {
      const auto res = run_symplecticity_check(cfg);
      if (!cfg.out.empty()) {
        write_csv(cfg.out, {"h", "defect", "threshold", "pass"},
                  {{cfg.h, res.defect, res.threshold, res.pass() ? 1.0 : 0.0}});
      }
      std::cout << "defect " << fmt(res.defect) << (res.pass() ? " PASS" : " FAIL") << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::InvalidInput) return kExitUsage;
    if (e.kind() == ErrorKind::Io) return kExitUsage;
    return kExitSolver;
  }
  return 0;
}
