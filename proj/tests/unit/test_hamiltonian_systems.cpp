#include <cmath>

#include <gtest/gtest.h>

#include "samples.hpp"
#include "symlie/abelian_systems.hpp"
#include "symlie/dipole.hpp"
#include "symlie/fd_oracle.hpp"
#include "symlie/nonregular.hpp"

using namespace symlie;
using Eigen::Matrix3d;
using Eigen::Vector3d;

namespace {

// Values computed separately with numpy from the closed-form energy.
constexpr double kPresetStateEnergy = -0.046239253715916535;
constexpr double kSampleStateEnergy = -0.6385559576449702;  // g = exp(0.3,-0.2,0.5), mu = (0.1,-0.2,0.05)

template <class Sys>
BigAlgebraElement<SO3> fd_f(const Sys& sys, const CotangentPoint<SO3>& z) {
  return fd_f_from_energy<SO3>(
      sys.group(), [&](const CotangentPoint<SO3>& p) { return sys.energy(p); }, z);
}

}  // namespace

TEST(DipoleParams, InertiaAndValidation) {
  DipoleParams p;
  EXPECT_EQ(p.inertia().diagonal(), Vector3d(1.01, 1.0, 0.010000000000000002));
  p.alpha = 0.0;
  EXPECT_THROW(p.validate(), Error);
  p = DipoleParams{};
  p.m = -1.0;
  EXPECT_THROW(DipoleSystem{p}, Error);
  p = DipoleParams{};
  p.gravity_sign = 0.5;
  EXPECT_THROW(p.validate(), Error);
}

TEST(DipoleEnergy, RegressionValues) {
  const DipoleParams p;
  EXPECT_NEAR(dipole_energy(p, dipole_preset_initial_state(p)), kPresetStateEnergy, 1e-15);
  const CotangentPoint<SO3> z{SO3::exp(Vector3d(0.3, -0.2, 0.5)), Vector3d(0.1, -0.2, 0.05)};
  EXPECT_NEAR(dipole_energy(p, z), kSampleStateEnergy, 1e-14);
}

TEST(DipoleEnergy, IdentityAtRest) {
  // Kinetic 0, gravity -m, and the two charges are equidistant from z.
  const DipoleParams p;
  EXPECT_NEAR(dipole_energy(p, {Matrix3d::Identity(), Vector3d::Zero()}), -1.0, 1e-15);
  DipoleParams flipped;
  flipped.gravity_sign = 1.0;
  EXPECT_NEAR(dipole_energy(flipped, {Matrix3d::Identity(), Vector3d::Zero()}), 1.0, 1e-15);
}

TEST(DipoleEnergy, EvenInMomentum) {
  const DipoleParams p;
  samples::Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    const Matrix3d g = gen.rotation();
    const Vector3d mu = gen.vec();
    EXPECT_NEAR(dipole_energy(p, {g, mu}), dipole_energy(p, {g, -mu}), 1e-15);
  }
}

TEST(DipoleEnergy, CollisionIsSingular) {
  DipoleParams p;
  p.field_charge_pos = p.body_charge_pos(+1);
  try {
    dipole_energy(p, {Matrix3d::Identity(), Vector3d::Zero()});
    FAIL() << "expected Singularity";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singularity);
  }
  EXPECT_THROW(dipole_f(p, {Matrix3d::Identity(), Vector3d::Zero()}), Error);
}

TEST(DipoleF, PresetInitialVelocityIsE2) {
  const DipoleSystem sys;
  const auto z0 = dipole_preset_initial_state(sys.params());
  EXPECT_LT((z0.mu - Vector3d(0, 0.01, 0)).norm(), 1e-17);
  EXPECT_LT((sys.f(z0).xi - Vector3d::UnitY()).norm(), 1e-15);
}

TEST(DipoleF, ZeroMomentumHasZeroVelocity) {
  const DipoleSystem sys;
  samples::Gen gen(32);
  EXPECT_EQ(sys.f({gen.rotation(), Vector3d::Zero()}).xi, Vector3d::Zero());
}

TEST(DipoleF, MatchesFiniteDifferencesOfEnergy) {
  samples::Gen gen(33);
  for (double sign : {-1.0, 1.0}) {
    DipoleParams p;
    p.gravity_sign = sign;
    const DipoleSystem sys(p);
    for (int i = 0; i < 200; ++i) {
      const CotangentPoint<SO3> z{gen.rotation(), gen.vec(0.1)};
      const auto an = sys.f(z), fd = fd_f(sys, z);
      EXPECT_LT((an.xi - fd.xi).norm(), 1e-6);
      EXPECT_LT((an.nu - fd.nu).norm(), 1e-6);
    }
  }
}

TEST(Nonregular, ZeroMatrixGivesZeroField) {
  const NonregularSystem sys(Matrix3d::Zero());
  samples::Gen gen(34);
  const auto f = sys.f({gen.rotation(), gen.vec()});
  EXPECT_EQ(f.xi, Vector3d::Zero());
  EXPECT_EQ(f.nu, Vector3d::Zero());
}

TEST(Nonregular, VelocityIgnoresMomentum) {
  const NonregularSystem sys;
  samples::Gen gen(35);
  const Matrix3d g = gen.rotation();
  EXPECT_EQ(sys.f({g, gen.vec()}).xi, sys.f({g, gen.vec()}).xi);
  const Matrix3d ag = sys.matrix() * g;
  EXPECT_LT((sys.v(g) - vee(0.5 * (ag - ag.transpose()))).norm(), 1e-15);
}

TEST(Nonregular, DirectionalDerivativeMatchesFiniteDifference) {
  const NonregularSystem sys;
  samples::Gen gen(36);
  const double e = 1e-6;
  for (int i = 0; i < 200; ++i) {
    const Matrix3d g = gen.rotation();
    const Vector3d eta = gen.vec();
    const Vector3d fd = (sys.v(SO3::exp(e * eta) * g) - sys.v(SO3::exp(-e * eta) * g)) / (2 * e);
    EXPECT_LT((sys.dv(g, eta) - fd).norm(), 1e-7);
  }
}

TEST(Nonregular, FMatchesFiniteDifferencesOfEnergy) {
  const NonregularSystem sys;
  samples::Gen gen(37);
  for (int i = 0; i < 200; ++i) {
    const CotangentPoint<SO3> z{gen.rotation(), gen.vec()};
    const auto an = sys.f(z), fd = fd_f(sys, z);
    EXPECT_LT((an.xi - fd.xi).norm(), 1e-6);
    EXPECT_LT((an.nu - fd.nu).norm(), 1e-6);
    const auto free_fn = nonregular_f(sys.matrix(), z);
    EXPECT_EQ(free_fn.nu, an.nu);
  }
}

TEST(AbelianOscillator, VectorFieldAndEnergy) {
  const AbelianOscillator sys(2);
  const CotangentPoint<Abelian> z{Eigen::Vector2d(1, 2), Eigen::Vector2d(3, 4)};
  const auto f = sys.f(z);
  EXPECT_EQ(f.xi, Eigen::VectorXd(Eigen::Vector2d(3, 4)));
  EXPECT_EQ(f.nu, Eigen::VectorXd(Eigen::Vector2d(-1, -2)));
  EXPECT_DOUBLE_EQ(sys.energy(z), 15.0);
}

TEST(TrivializedSystem, EnergyDefaultsToInvalidInput) {
  struct NoEnergy final : TrivializedSystem<SO3> {
    SO3 g;
    const SO3& group() const override { return g; }
    BigAlgebraElement<SO3> f(const CotangentPoint<SO3>&) const override {
      return {Vector3d::Zero(), Vector3d::Zero()};
    }
  } sys;
  EXPECT_FALSE(sys.has_energy());
  EXPECT_THROW(sys.energy({Matrix3d::Identity(), Vector3d::Zero()}), Error);
}
