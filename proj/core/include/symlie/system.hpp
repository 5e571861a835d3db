#pragma once

#include "symlie/cotangent.hpp"
#include "symlie/error.hpp"

namespace symlie {

/// A Hamiltonian (or more generally any) ODE on G x g* written as
/// z' = f(z) . z. Implementations are immutable and safe to share.
template <LieGroup G>
class TrivializedSystem {
 public:
  virtual ~TrivializedSystem() = default;

  virtual const G& group() const = 0;
  virtual BigAlgebraElement<G> f(const CotangentPoint<G>& z) const = 0;

  virtual bool has_energy() const { return false; }
  virtual double energy(const CotangentPoint<G>&) const {
    fail(ErrorKind::InvalidInput, "system does not provide an energy");
  }
};

}  // namespace symlie
