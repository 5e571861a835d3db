#pragma once

#include "symlie/abelian.hpp"
#include "symlie/system.hpp"

namespace symlie {

/// H = 1/2 (|p|^2 + |q|^2) on T*R^n.
class AbelianOscillator final : public TrivializedSystem<Abelian> {
 public:
  explicit AbelianOscillator(int n = 1) : group_(n) {}

  const Abelian& group() const override { return group_; }
  BigAlgebraElement<Abelian> f(const CotangentPoint<Abelian>& z) const override {
    return {z.mu, -z.q};
  }
  bool has_energy() const override { return true; }
  double energy(const CotangentPoint<Abelian>& z) const override {
    return 0.5 * (z.mu.squaredNorm() + z.q.squaredNorm());
  }

 private:
  Abelian group_;
};

}  // namespace symlie
