#pragma once

#include "wpr/errors.hpp"
#include "wpr/koszul.hpp"
#include "wpr/resolution.hpp"

#include <vector>

namespace wpr {

struct GammaResult {
  /// Gamma_a(M) as a submodule of M.
  Subquotient submodule;
  /// Least s with ann(a^s) = ann(a^{s+1}).
  std::size_t stabilization = 0;
};
/// Throws BudgetExceeded when the chain of annihilators has not stabilized
/// by max_stabilization.
GammaResult gamma(const FpModule& m, const Sequence& a, std::size_t max_stabilization = 32);
/// Gamma(Gamma(M)) = Gamma(M) as submodules of M.
bool gamma_idempotence(const FpModule& m, const Sequence& a, std::size_t max_stabilization = 32);

/// {Ext^p(A/a^i, M)} with transitions induced by A/a^{i+1} -> A/a^i.
CohomologyTower ext_torsion_tower(const FpModule& m, const Sequence& a, int p, std::size_t depth);
/// {H^p(K^v(A; a^i) (x) M)} with the dual Koszul transitions.
CohomologyTower koszul_torsion_tower(const FpModule& m, const Sequence& a, int p, std::size_t depth);

/// Levelwise comparison Ext^p(A/a^i, M) -> H^p(K^v(A; a^i) (x) M) induced by
/// K(A; a^i) -> F_i lifting A -> A/a^i, which exists because the
/// elementwise powers lie in the ideal power.
struct TorsionComparison {
  CohomologyTower ext, koszul;
  std::vector<RMatrix> levels;
  EquivalenceVerdict verdict;
};
TorsionComparison compare_torsion_towers(const FpModule& m, const Sequence& a, int p, std::size_t depth,
                                         std::size_t window);

/// The stabilized H^0 of the Koszul torsion tower as a submodule of M.
struct KoszulGamma {
  Subquotient submodule;
  std::size_t stabilization = 0;
};
KoszulGamma koszul_gamma(const FpModule& m, const Sequence& a, std::size_t max_stabilization = 32);

/// Pro-system of quotients M / I_k M with the canonical surjections.
struct QuotientTower {
  Tower tower;
  /// Projection M -> level k in minimized coordinates.
  std::vector<RMatrix> projections;
};
QuotientTower completion_tower(const FpModule& m, const Sequence& a, std::size_t depth);
/// Levels M / k_i M for a divisibility chain k_1 | k_2 | ... over Z.
QuotientTower profinite_tower(const FpModule& m, const std::vector<Integer>& chain);

/// For every degree q, the pro-system {H^q(C (x) K(A; a^i))}.
struct DegreeTower {
  int degree = 0;
  CohomologyTower tower;
};
std::vector<DegreeTower> derived_completion_tower(const Complex& c, const Sequence& a, std::size_t depth);

struct MgmEntry {
  std::size_t level = 0;  // the fixed outer index
  int degree = 0;
  EquivalenceVerdict verdict;
};
struct MgmVerdict {
  bool tau_pass = true, sigma_pass = true;
  /// For fixed k: H^p(K^v_k (x) M) -> {H^p(K^v_k (x) M (x) K_i)}_i, a map into
  /// a pro-system induced by A[0] -> K_i.
  std::vector<MgmEntry> tau;
  /// For fixed i: {H^p(K^v_k (x) M (x) K_i)}_k -> H^p(M (x) K_i), a map from
  /// an ind-system induced by rho_k.
  std::vector<MgmEntry> sigma;
};
/// Throws std::invalid_argument unless a passes the weak proregularity
/// check at the same depth and window.
MgmVerdict mgm_check(const FpModule& m, const Sequence& a, std::size_t depth, std::size_t window);

}  // namespace wpr
