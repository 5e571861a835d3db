#include "symlie/tableau.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "symlie/error.hpp"

namespace symlie {

namespace {

constexpr double kOrderTolerance = 1e-12;

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// DIRK tableau of consecutive midpoint steps with fractions w:
// a_ij = w_j below the diagonal, a_ii = w_i / 2, b = w.
ButcherTableau midpoint_dirk(const std::vector<double>& w, std::string name) {
  const int s = static_cast<int>(w.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s, s);
  Eigen::VectorXd b(s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < i; ++j) a(i, j) = w[j];
    a(i, i) = 0.5 * w[i];
    b(i) = w[i];
  }
  return ButcherTableau::make(std::move(a), std::move(b), std::nullopt, std::move(name));
}

}  // namespace

ButcherTableau ButcherTableau::make(Eigen::MatrixXd a, Eigen::VectorXd b,
                                    std::optional<int> cutoff_r, std::string name) {
  if (b.size() < 1) fail(ErrorKind::InvalidInput, "tableau needs at least one stage");
  if (a.rows() != b.size() || a.cols() != b.size()) {
    fail(ErrorKind::InvalidInput, "tableau a must be s x s with s = size of b");
  }
  if (!a.allFinite() || !b.allFinite()) {
    fail(ErrorKind::InvalidInput, "tableau coefficients must be finite");
  }
  ButcherTableau t;
  t.c = a.rowwise().sum();
  t.a = std::move(a);
  t.b = std::move(b);
  t.cutoff_r = cutoff_r;
  t.name = std::move(name);
  return t;
}

void ButcherTableau::require_nonzero_weights() const {
  for (int i = 0; i < stages(); ++i) {
    if (b(i) == 0.0) {
      fail(ErrorKind::InvalidInput,
           "variational methods need b_i != 0 (b_" + std::to_string(i + 1) + " = 0 in " +
               (name.empty() ? std::string("tableau") : name) + ")");
    }
  }
}

ButcherTableau gauss_tableau(int s) {
  switch (s) {
    case 1: {
      Eigen::MatrixXd a(1, 1);
      a << 0.5;
      Eigen::VectorXd b(1);
      b << 1.0;
      return ButcherTableau::make(a, b, 0, "gauss1");
    }
    case 2: {
      const double r3 = std::sqrt(3.0);
      Eigen::MatrixXd a(2, 2);
      a << 0.25, 0.25 - r3 / 6.0,
           0.25 + r3 / 6.0, 0.25;
      Eigen::VectorXd b(2);
      b << 0.5, 0.5;
      return ButcherTableau::make(a, b, 2, "gauss2");
    }
    case 3: {
      const double r15 = std::sqrt(15.0);
      Eigen::MatrixXd a(3, 3);
      a << 5.0 / 36.0, 2.0 / 9.0 - r15 / 15.0, 5.0 / 36.0 - r15 / 30.0,
           5.0 / 36.0 + r15 / 24.0, 2.0 / 9.0, 5.0 / 36.0 - r15 / 24.0,
           5.0 / 36.0 + r15 / 30.0, 2.0 / 9.0 + r15 / 15.0, 5.0 / 36.0;
      Eigen::VectorXd b(3);
      b << 5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0;
      return ButcherTableau::make(a, b, 4, "gauss3");
    }
    default:
      fail(ErrorKind::InvalidInput, "Gauss tableau available for s = 1, 2, 3 only");
  }
}

ButcherTableau midpoint_tableau() {
  auto t = gauss_tableau(1);
  t.name = "midpoint";
  return t;
}

ButcherTableau kutta3_tableau() {
  Eigen::MatrixXd a(3, 3);
  a << 0.0, 0.0, 0.0,
       0.5, 0.0, 0.0,
       -1.0, 2.0, 0.0;
  Eigen::VectorXd b(3);
  b << 1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0;
  return ButcherTableau::make(a, b, 1, "kutta3");
}

ButcherTableau yoshida_dirk(int order) {
  switch (order) {
    case 2:
      return midpoint_dirk({1.0}, "yoshida2");
    case 4: {
      const double cbrt2 = std::cbrt(2.0);
      const double g1 = 1.0 / (2.0 - cbrt2);
      const double g2 = -cbrt2 / (2.0 - cbrt2);
      return midpoint_dirk({g1, g2, g1}, "yoshida4");
    }
    case 6: {
      const auto& g = kYoshida6;
      return midpoint_dirk({g[0], g[1], g[2], g[3], g[2], g[1], g[0]}, "yoshida6");
    }
    default:
      fail(ErrorKind::InvalidInput, "Yoshida DIRK available for order 2, 4, 6 only");
  }
}

ButcherTableau compose_tableaux(const ButcherTableau& t1, const ButcherTableau& t2,
                                double gamma) {
  const int s1 = t1.stages();
  const int s2 = t2.stages();
  const int s = s1 + s2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s, s);
  a.topLeftCorner(s1, s1) = gamma * t1.a;
  a.bottomLeftCorner(s2, s1).rowwise() = gamma * t1.b.transpose();
  a.bottomRightCorner(s2, s2) = (1.0 - gamma) * t2.a;
  Eigen::VectorXd b(s);
  b << gamma * t1.b, (1.0 - gamma) * t2.b;
  return ButcherTableau::make(std::move(a), std::move(b), std::nullopt,
                              "compose(" + t1.name + "," + t2.name + ")");
}

ButcherTableau compose_sequence(const ButcherTableau& t, std::span<const double> weights) {
  if (weights.empty()) fail(ErrorKind::InvalidInput, "composition needs at least one weight");
  const int s = t.stages();
  const int k = static_cast<int>(weights.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k * s, k * s);
  Eigen::VectorXd b(k * s);
  for (int blk = 0; blk < k; ++blk) {
    a.block(blk * s, blk * s, s, s) = weights[blk] * t.a;
    for (int prev = 0; prev < blk; ++prev) {
      a.block(blk * s, prev * s, s, s).rowwise() = weights[prev] * t.b.transpose();
    }
    b.segment(blk * s, s) = weights[blk] * t.b;
  }
  return ButcherTableau::make(std::move(a), std::move(b), std::nullopt,
                              t.name + "^" + std::to_string(k));
}

ButcherTableau hat_coefficients(const ButcherTableau& t) {
  t.require_nonzero_weights();
  const int s = t.stages();
  Eigen::MatrixXd a_hat(s, s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      a_hat(i, j) = t.b(j) - t.b(j) * t.a(j, i) / t.b(i);
    }
  }
  return ButcherTableau::make(std::move(a_hat), t.b, t.cutoff_r, t.name + "^");
}

bool OrderReport::satisfied() const {
  switch (requested) {
    case 1: return order1;
    case 2: return order1 && order2;
    case 3: return order1 && order2 && order3;
    default: return false;
  }
}

OrderReport check_order_conditions(const ButcherTableau& t, int p) {
  if (p < 1 || p > 3) fail(ErrorKind::InvalidInput, "order conditions checked for p = 1..3");
  OrderReport rep;
  rep.requested = p;
  const double r1 = std::abs(t.b.sum() - 1.0);
  const double r2 = std::abs(t.b.dot(t.c) - 0.5);
  const double r3a = std::abs(t.b.dot(t.c.cwiseProduct(t.c)) - 1.0 / 3.0);
  const double r3b = std::abs(t.b.dot(t.a * t.c) - 1.0 / 6.0);
  rep.order1 = r1 <= kOrderTolerance;
  rep.order2 = r2 <= kOrderTolerance;
  rep.order3 = r3a <= kOrderTolerance && r3b <= kOrderTolerance;
  rep.max_residual = r1;
  if (p >= 2) rep.max_residual = std::max(rep.max_residual, r2);
  if (p >= 3) rep.max_residual = std::max({rep.max_residual, r3a, r3b});
  return rep;
}

std::vector<std::string> tableau_ids() {
  return {"gauss1", "gauss2", "gauss3", "midpoint", "kutta3", "yoshida4", "yoshida6"};
}

ButcherTableau tableau_by_id(std::string_view id) {
  if (id == "gauss1") return gauss_tableau(1);
  if (id == "gauss2") return gauss_tableau(2);
  if (id == "gauss3") return gauss_tableau(3);
  if (id == "midpoint") return midpoint_tableau();
  if (id == "kutta3") return kutta3_tableau();
  if (id == "yoshida4") return yoshida_dirk(4);
  if (id == "yoshida6") return yoshida_dirk(6);
  fail(ErrorKind::InvalidInput, "unknown tableau id '" + std::string(id) + "'");
}

std::string format_tableau(const ButcherTableau& t) {
  std::ostringstream os;
  const int s = t.stages();
  os << "name " << (t.name.empty() ? "-" : t.name) << '\n';
  os << "stages " << s << '\n';
  os << "cutoff " << (t.cutoff_r ? std::to_string(*t.cutoff_r) : std::string("none")) << '\n';
  os << "a\n";
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) os << (j ? " " : "") << format_double(t.a(i, j));
    os << '\n';
  }
  os << "b\n";
  for (int i = 0; i < s; ++i) os << (i ? " " : "") << format_double(t.b(i));
  os << "\nc\n";
  for (int i = 0; i < s; ++i) os << (i ? " " : "") << format_double(t.c(i));
  os << '\n';
  return os.str();
}

}  // namespace symlie
