#include <cmath>

#include <gtest/gtest.h>

#include "samples.hpp"
#include "symlie/abelian.hpp"
#include "symlie/error.hpp"
#include "symlie/lie_group.hpp"
#include "symlie/so3.hpp"

using namespace symlie;
using Eigen::Matrix3d;
using Eigen::Vector3d;

namespace {

// exp by the matrix power series, summed until the terms vanish.
Matrix3d exp_series(const Vector3d& x) {
  Matrix3d out = Matrix3d::Identity();
  Matrix3d term = Matrix3d::Identity();
  for (int k = 1; k < 60; ++k) {
    term = term * hat(x) / k;
    out += term;
  }
  return out;
}

// dexp_x y = sum_k ad_x^k y / (k+1)!
Vector3d dexp_series(const Vector3d& x, const Vector3d& y) {
  Vector3d out = y, term = y;
  double fact = 1.0;
  for (int k = 1; k < 40; ++k) {
    term = x.cross(term);
    fact *= k + 1;
    out += term / fact;
  }
  return out;
}

// Bernoulli numbers from sum_{k=0}^{m} C(m+1, k) B_k = 0, B_0 = 1.
std::vector<double> bernoulli_recurrence(int n) {
  std::vector<double> B(n + 1, 0.0);
  B[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0, binom = 1.0;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += binom * B[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B[m] = -acc / (m + 1);
  }
  return B;
}

double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

}  // namespace

TEST(So3Hat, RoundTripAndCrossProduct) {
  samples::Gen gen(1);
  for (int i = 0; i < 100; ++i) {
    const Vector3d v = gen.vec(), w = gen.vec();
    EXPECT_LT((vee(hat(v)) - v).norm(), 1e-15);
    EXPECT_LT((hat(v) * w - v.cross(w)).norm(), 1e-15);
  }
}

TEST(So3Hat, VeeRejectsNonSkew) {
  Matrix3d m = hat(Vector3d(1, 2, 3));
  m(0, 0) = 1e-6;
  try {
    vee(m);
    FAIL() << "expected InvalidInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(So3Exp, QuarterTurnAboutE3) {
  Matrix3d expected;
  expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_LT((SO3::exp(Vector3d(0, 0, M_PI / 2)) - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((SO3::exp(Vector3d(0, 0, M_PI / 2)) - exp_series(Vector3d(0, 0, M_PI / 2)))
                .cwiseAbs()
                .maxCoeff(),
            1e-14);
}

TEST(So3Exp, MatchesPowerSeries) {
  samples::Gen gen(2);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(3.0);
    EXPECT_LT((SO3::exp(x) - exp_series(x)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(So3Exp, IsOrthogonal) {
  samples::Gen gen(3);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Matrix3d g = SO3::exp(gen.rotvec(10.0));
    EXPECT_LT((g.transpose() * g - Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(g.determinant(), 1.0, 1e-14);
  }
}

TEST(So3Log, InvertsExpOnPrincipalBranch) {
  samples::Gen gen(4);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(3.0);
    EXPECT_LT((SO3::log(SO3::exp(x)) - x).norm(), 1e-12);
  }
  EXPECT_EQ(SO3::log(Matrix3d::Identity()), Vector3d::Zero());
  EXPECT_LT((SO3::log(SO3::exp(Vector3d(1e-9, 0, 0))) - Vector3d(1e-9, 0, 0)).norm(), 1e-24);
}

TEST(So3Log, BranchCutNearPi) {
  try {
    SO3::log(SO3::exp(Vector3d(M_PI, 0, 0)));
    FAIL() << "expected BranchCut";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BranchCut);
  }
}

TEST(So3Dexp, BranchCutAtTwoPi) {
  try {
    SO3::dexpinv(Vector3d(2 * M_PI, 0, 0), Vector3d(1, 0, 0));
    FAIL() << "expected BranchCut";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BranchCut);
  }
}

TEST(So3Algebra, JacobiAndAntisymmetry) {
  samples::Gen gen(5);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.vec(), y = gen.vec(), z = gen.vec();
    EXPECT_LT((SO3::bracket(x, y) + SO3::bracket(y, x)).norm(), 1e-15);
    const Vector3d jac = SO3::bracket(x, SO3::bracket(y, z)) + SO3::bracket(y, SO3::bracket(z, x)) +
                         SO3::bracket(z, SO3::bracket(x, y));
    EXPECT_LT(jac.norm(), 1e-14);
  }
}

TEST(So3Algebra, AdjointPairings) {
  samples::Gen gen(6);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.vec(), y = gen.vec(), mu = gen.vec();
    const Matrix3d g = gen.rotation();
    EXPECT_NEAR(SO3::pairing(SO3::ad_star(x, mu), y), SO3::pairing(mu, SO3::bracket(x, y)), 1e-14);
    EXPECT_NEAR(SO3::pairing(SO3::Ad_star(g, mu), y), SO3::pairing(mu, SO3::Ad(g, y)), 1e-14);
    EXPECT_LT((SO3::Ad(g, x) - vee(g * hat(x) * g.transpose())).norm(), 1e-14);
  }
}

TEST(So3Algebra, AdOfExpIsExpOfAd) {
  samples::Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    const Vector3d x = gen.rotvec(2.0), y = gen.vec();
    Vector3d series = y, term = y;
    for (int k = 1; k < 40; ++k) {
      term = x.cross(term) / k;
      series += term;
    }
    EXPECT_LT((SO3::Ad(SO3::exp(x), y) - series).norm(), 1e-13);
  }
}

TEST(So3Dexp, MatchesSeries) {
  samples::Gen gen(8);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(3.0), y = gen.vec();
    EXPECT_LT((SO3::dexp(x, y) - dexp_series(x, y)).norm(), 1e-13);
  }
}

TEST(So3Dexp, IsRightTrivializedDerivativeOfExp) {
  samples::Gen gen(9);
  const double eps = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const Vector3d x = gen.rotvec(3.0), y = gen.vec();
    const Matrix3d d = (SO3::exp(x + eps * y) - SO3::exp(x - eps * y)) / (2 * eps);
    EXPECT_LT((vee(0.5 * (d * SO3::exp(x).transpose() - (d * SO3::exp(x).transpose()).transpose())) -
               SO3::dexp(x, y))
                  .norm(),
              1e-8);
  }
}

TEST(So3Dexp, DexpinvInvertsDexp) {
  samples::Gen gen(10);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(5.0), y = gen.vec();
    EXPECT_LT((SO3::dexpinv(x, SO3::dexp(x, y)) - y).norm(), 1e-12);
    EXPECT_LT((SO3::dexp_matrix(x) * SO3::dexpinv_matrix(x) - Matrix3d::Identity()).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(So3Dexp, DexpTimesDexpinvOfMinusXIsAd) {
  samples::Gen gen(11);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(3.0), y = gen.vec();
    EXPECT_LT((SO3::dexp(x, SO3::dexpinv(-x, y)) - SO3::Ad(SO3::exp(x), y)).norm(), 1e-12);
  }
}

TEST(So3Dexp, StarFormsAreAdjoints) {
  samples::Gen gen(12);
  for (int i = 0; i < samples::kSamples; ++i) {
    const Vector3d x = gen.rotvec(3.0), y = gen.vec(), mu = gen.vec();
    EXPECT_NEAR(SO3::pairing(SO3::dexp_star(x, mu), y), SO3::pairing(mu, SO3::dexp(x, y)), 1e-13);
    EXPECT_NEAR(SO3::pairing(SO3::dexpinv_star(x, mu), y), SO3::pairing(mu, SO3::dexpinv(x, y)),
                1e-12);
  }
}

TEST(So3Series, AgreesWithClosedFormAcrossThreshold) {
  // Just below the threshold the series is used; just above, the closed
  // form. Both must agree with the long series to 1e-13.
  samples::Gen gen(13);
  for (int i = 0; i < samples::kSamples; ++i) {
    const double angle = SO3::kSeriesThreshold * gen.uniform(0.5, 1.5);
    const Vector3d x = gen.rotvec(1.0).normalized() * angle, y = gen.vec();
    EXPECT_LT((SO3::exp(x) - exp_series(x)).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((SO3::dexp(x, y) - dexp_series(x, y)).norm(), 1e-13);
    EXPECT_LT((SO3::dexpinv(x, dexp_series(x, y)) - y).norm(), 1e-13);
    EXPECT_LT((SO3::log(exp_series(x)) - x).norm(), 1e-13);
  }
}

TEST(Bernoulli, TableMatchesRecurrence) {
  const auto B = bernoulli_recurrence(kMaxCutoff);
  for (int k = 0; k <= kMaxCutoff; ++k) {
    EXPECT_NEAR(kBernoulli[k].value(), B[k], 1e-15) << "k = " << k;
    EXPECT_NEAR(dexpinv_series_coefficient(k), B[k] / factorial(k), 1e-16);
  }
}

TEST(DexpinvTrunc, R0IsIdentityAndR1SubtractsHalfBracket) {
  const SO3 grp;
  const Vector3d x(0.3, -0.1, 0.2), y(1, 2, 3);
  EXPECT_EQ(dexpinv_trunc(grp, 0, x, y), y);
  EXPECT_LT((dexpinv_trunc(grp, 1, x, y) - (y - 0.5 * x.cross(y))).norm(), 1e-16);
}

TEST(DexpinvTrunc, RejectsCutoffOutOfRange) {
  const SO3 grp;
  EXPECT_THROW(dexpinv_trunc(grp, 7, Vector3d::Zero(), Vector3d::Zero()), Error);
  EXPECT_THROW(dexpinv_trunc(grp, -1, Vector3d::Zero(), Vector3d::Zero()), Error);
}

TEST(DexpinvTrunc, RemainderHasOrderRPlusOne) {
  // |dexpinv - dexpinv_(r)| = O(|x|^(r+1)): halving x divides the remainder
  // by about 2^(r+1) (2^(r+2) when B_(r+1) = 0).
  const SO3 grp;
  samples::Gen gen(14);
  for (int r = 0; r <= kMaxCutoff; ++r) {
    int checked = 0;
    for (int i = 0; i < samples::kSamples; ++i) {
      const Vector3d dir = gen.rotvec(1.0).normalized(), y = gen.vec().normalized();
      const double s = 0.2;
      auto rem = [&](double scale) {
        const Vector3d x = scale * dir;
        return (SO3::dexpinv(x, y) - dexpinv_trunc(grp, r, x, y)).norm();
      };
      const double e1 = rem(s), e2 = rem(s / 2);
      if (e1 < 1e-13) continue;  // remainder below round-off for this sample
      const double order = std::log2(e1 / e2);
      EXPECT_GE(order, r + 1 - 0.15) << "r = " << r;
      ++checked;
    }
    EXPECT_GT(checked, samples::kSamples / 2) << "r = " << r;
  }
}

TEST(DexpinvTrunc, StarIsAdjoint) {
  const SO3 grp;
  samples::Gen gen(15);
  for (int r = 0; r <= kMaxCutoff; ++r) {
    const Vector3d x = gen.vec(), y = gen.vec(), mu = gen.vec();
    EXPECT_NEAR(mu.dot(dexpinv_trunc(grp, r, x, y)), dexpinv_trunc_star(grp, r, x, mu).dot(y), 1e-13);
  }
}

TEST(PStar, MatchesFiniteDifferenceAdjoint) {
  // <P*_(r)(x, xi) mu, d> = <mu, d/de dexpinv_(r),(x + e d) xi>
  const SO3 grp;
  samples::Gen gen(16);
  const double eps = 1e-6;
  for (int r = 0; r <= kMaxCutoff; ++r) {
    for (int i = 0; i < 50; ++i) {
      const Vector3d x = gen.vec(0.5), xi = gen.vec(), mu = gen.vec(), d = gen.vec();
      const Vector3d deriv =
          (dexpinv_trunc(grp, r, Vector3d(x + eps * d), xi) -
           dexpinv_trunc(grp, r, Vector3d(x - eps * d), xi)) / (2 * eps);
      EXPECT_NEAR(p_star_poly(grp, r, x, xi, mu).dot(d), mu.dot(deriv), 1e-9) << "r = " << r;
    }
  }
}

TEST(Abelian, MapsAreIdentities) {
  const Abelian grp(4);
  samples::Gen gen(17);
  const Eigen::VectorXd x = gen.vecx(4), y = gen.vecx(4), mu = gen.vecx(4);
  EXPECT_EQ(grp.exp(x), x);
  EXPECT_EQ(grp.log(x), x);
  EXPECT_EQ(grp.dexp(x, y), y);
  EXPECT_EQ(grp.dexpinv_star(x, mu), mu);
  EXPECT_EQ(grp.bracket(x, y), Eigen::VectorXd::Zero(4));
  EXPECT_EQ(grp.multiply(x, y), x + y);
  EXPECT_EQ(grp.inverse(x), -x);
  EXPECT_EQ(dexpinv_trunc(grp, 6, x, y), y);
  EXPECT_EQ(p_star_poly(grp, 4, x, y, mu), Eigen::VectorXd::Zero(4));
}

TEST(Abelian, RejectsWrongDimension) {
  const Abelian grp(3);
  try {
    grp.exp(Eigen::VectorXd::Zero(2));
    FAIL() << "expected InvalidInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}
