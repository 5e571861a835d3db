#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace symlie {

/// Runge-Kutta coefficients (a, b, c) with c the row sums of a, plus the
/// RKMK cut-off r the tableau is meant to be used with (if any).
struct ButcherTableau {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::optional<int> cutoff_r;
  std::string name;

  /// Validates shapes and derives c from a. Throws InvalidInput.
  static ButcherTableau make(Eigen::MatrixXd a, Eigen::VectorXd b,
                             std::optional<int> cutoff_r = std::nullopt,
                             std::string name = {});

  int stages() const { return static_cast<int>(b.size()); }

  /// Variational methods divide by b_i; throws InvalidInput if any is zero.
  void require_nonzero_weights() const;
};

/// s-stage Gauss method (s = 1, 2, 3) with cut-off 0, 2, 4.
ButcherTableau gauss_tableau(int s);
ButcherTableau midpoint_tableau();
/// Kutta's third order method with cut-off 1.
ButcherTableau kutta3_tableau();

/// DIRK tableaux of the symmetric midpoint compositions (order 2, 4, 6).
ButcherTableau yoshida_dirk(int order);

/// Weights of Yoshida's sixth order composition, gamma_1..gamma_4.
inline constexpr double kYoshida6[4] = {
    0.78451361047755726381949763, 0.23557321335935813368479318,
    -1.17767998417887100694641568, 1.31518632068391121888424973};

/// Tableau of t1 applied with gamma h followed by t2 with (1 - gamma) h.
ButcherTableau compose_tableaux(const ButcherTableau& t1, const ButcherTableau& t2,
                                double gamma);

/// k-fold composition of the same tableau with step fractions summing to 1.
ButcherTableau compose_sequence(const ButcherTableau& t, std::span<const double> weights);

/// Momentum-side coefficients of the induced partitioned method,
///   a^_ij = b_j - b_j a_ji / b_i,  b^_i = b_i.
ButcherTableau hat_coefficients(const ButcherTableau& t);

struct OrderReport {
  int requested = 0;
  bool order1 = false;  // sum b = 1
  bool order2 = false;  // sum b c = 1/2
  bool order3 = false;  // sum b c^2 = 1/3 and sum b a c = 1/6
  double max_residual = 0.0;

  bool satisfied() const;
};

/// Classical RK conditions up to p (1..3) at tolerance 1e-12.
OrderReport check_order_conditions(const ButcherTableau& t, int p);

/// Ids accepted by tableau_by_id(): gauss1 gauss2 gauss3 midpoint kutta3
/// yoshida4 yoshida6.
std::vector<std::string> tableau_ids();
ButcherTableau tableau_by_id(std::string_view id);

/// Plain-text table: name, stages, cutoff, rows of a, then b and c.
std::string format_tableau(const ButcherTableau& t);

}  // namespace symlie
