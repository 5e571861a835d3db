#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "symlie/abelian.hpp"
#include "symlie/group_steps.hpp"
#include "symlie/sprk.hpp"
#include "symlie/vcg.hpp"
#include "symlie/vrkmk.hpp"

namespace symlie {

/// rkmk and cg advance q only, along the frozen-momentum field
/// q' = f(q, mu0).xi q, and leave mu at mu0. sprk needs the abelian group.
enum class Method { Vrkmk, Vcg, Rkmk, Cg, Sprk };

std::string_view to_string(Method m);
/// Accepts vrkmk, vcg, rkmk, cg, sprk. Throws InvalidInput otherwise.
Method method_from_string(std::string_view id);

/// One step of any method. The warm state is ignored by the group-only
/// methods.
template <LieGroup G>
StepResult<G> step(Method m, const TrivializedSystem<G>& sys, const CotangentPoint<G>& z0,
                   const StepConfig& cfg, const ButcherTableau& t,
                   const StageState* warm = nullptr) {
  const G& grp = sys.group();
  GroupVectorField<G> frozen = [&](const typename G::Element& q) {
    return sys.f({q, z0.mu}).xi;
  };
  switch (m) {
    case Method::Vrkmk:
      return vrkmk_step(sys, z0, cfg, t, warm);
    case Method::Vcg:
      return vcg_step(sys, z0, cfg, t, warm);
    case Method::Rkmk:
      return {{rkmk_group_step(grp, frozen, z0.q, cfg, t), z0.mu}, {}};
    case Method::Cg:
      return {{cg_group_step(grp, frozen, z0.q, cfg, t), z0.mu}, {}};
    case Method::Sprk:
      if constexpr (std::is_same_v<G, Abelian>) {
        return sprk_step(sys, z0, cfg, t, warm);
      } else {
        fail(ErrorKind::InvalidInput, "sprk is only defined on the abelian group");
      }
  }
  fail(ErrorKind::InvalidInput, "unknown method");
}

struct StepRecord {
  int index = 0;  // 0 is the initial point
  double time = 0.0;
  int iterations = 0;
};

/// Calls visit(record, z) for the initial point and after each of n_steps
/// steps. Stage guesses are warm-started from the previous step. Errors are
/// rethrown with the failing step index prepended.
template <LieGroup G, class Visit>
CotangentPoint<G> integrate_visit(const TrivializedSystem<G>& sys, CotangentPoint<G> z,
                                  const StepConfig& cfg, const ButcherTableau& t, Method m,
                                  int n_steps, Visit&& visit) {
  if (n_steps < 1) fail(ErrorKind::InvalidInput, "n_steps must be >= 1");
  visit(StepRecord{0, 0.0, 0}, std::as_const(z));
  StageState warm;
  for (int k = 1; k <= n_steps; ++k) {
    try {
      auto res = step(m, sys, z, cfg, t, warm.unknowns.size() ? &warm : nullptr);
      z = std::move(res.z);
      warm = std::move(res.stages);
    } catch (const Error& e) {
      throw Error(e.kind(), "step " + std::to_string(k) + ": " + e.message());
    }
    visit(StepRecord{k, k * cfg.h, warm.iterations}, std::as_const(z));
  }
  return z;
}

template <LieGroup G>
struct Trajectory {
  std::vector<double> times;
  std::vector<CotangentPoint<G>> points;
  std::vector<double> energies;  // empty if the system has no energy
  std::vector<int> iterations;
};

template <LieGroup G>
Trajectory<G> integrate(const TrivializedSystem<G>& sys, const CotangentPoint<G>& z0,
                        const StepConfig& cfg, const ButcherTableau& t, Method m, int n_steps) {
  Trajectory<G> tr;
  const bool with_energy = sys.has_energy();
  integrate_visit(sys, z0, cfg, t, m, n_steps,
                  [&](const StepRecord& rec, const CotangentPoint<G>& z) {
                    tr.times.push_back(rec.time);
                    tr.points.push_back(z);
                    tr.iterations.push_back(rec.iterations);
                    if (with_energy) tr.energies.push_back(sys.energy(z));
                  });
  return tr;
}

/// t1 with gamma h followed by t2 with (1 - gamma) h.
template <LieGroup G>
CotangentPoint<G> compose_steps(const TrivializedSystem<G>& sys, const CotangentPoint<G>& z0,
                                const StepConfig& cfg, const ButcherTableau& t1,
                                const ButcherTableau& t2, double gamma, Method m) {
  StepConfig c1 = cfg;
  c1.h = gamma * cfg.h;
  StepConfig c2 = cfg;
  c2.h = (1.0 - gamma) * cfg.h;
  const auto mid = step(m, sys, z0, c1, t1).z;
  return step(m, sys, mid, c2, t2).z;
}

}  // namespace symlie
