#pragma once

#include "wpr/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wpr {

enum class Variance { Pro, Ind };

/// Depth-N truncation of a pro-system (maps X_{i+1} -> X_i) or an
/// ind-system (maps X_i -> X_{i+1}). Levels are numbered from 1.
struct Tower {
  Variance variance = Variance::Pro;
  std::vector<FpModule> levels;
  /// adjacent[k] joins levels k+1 and k+2 in the direction of the variance.
  std::vector<RMatrix> adjacent;

  std::size_t depth() const { return levels.size(); }
  const FpModule& at(std::size_t i) const { return levels.at(i - 1); }
  /// Transition between levels i <= j: X_j -> X_i for pro, X_i -> X_j for ind.
  Morphism transition(std::size_t i, std::size_t j) const;
};

/// Constant tower with identity transitions.
Tower constant_tower(Variance v, const FpModule& m, std::size_t depth);
/// Throws std::invalid_argument unless every adjacent map is well defined.
void validate(const Tower& t);

/// Cohomology tower H^q(C_i) for complexes C_1..C_N; maps[k] joins C_{k+1}
/// and C_{k+2} in the direction of the variance.
struct CohomologyTower {
  Tower tower;
  std::vector<Subquotient> cohomology;
};
CohomologyTower cohomology_tower(Variance v, const std::vector<Complex>& complexes,
                                 const std::vector<ComplexMorphism>& maps, int q);
/// Levelwise maps between cohomology towers induced by chain maps f_i.
std::vector<RMatrix> induced_levels(const std::vector<ComplexMorphism>& f, int q, const CohomologyTower& source,
                                    const CohomologyTower& target);

/// Levels i that must be certified at depth N and window w: (1 + w) i <= N.
std::size_t required_levels(std::size_t depth, std::size_t window);

struct ProZeroVerdict {
  bool pass = false;
  /// For every required level i, the least certifying j (0 when none).
  std::vector<std::size_t> certificates;
  /// First uncertified level (0 on pass) and the levels j whose transition
  /// with it is nonzero.
  std::size_t witness = 0;
  std::vector<std::size_t> nonzero;
};

/// Pro: X_j -> X_i zero; ind: X_i -> X_j zero. Searched over i < j <= N.
ProZeroVerdict is_pro_zero(const Tower& t, std::size_t window);

struct EquivalenceVerdict {
  bool pass = false;
  std::vector<std::size_t> certificates;
  std::size_t witness = 0;
  /// Whether f_i is bijective, for every level.
  std::vector<bool> bijective;
};

/// Finite-depth test that a levelwise map f : X -> Y is an isomorphism of
/// systems: for every required level i some j >= i kills the kernel and
/// covers the cokernel. Pro: ker f_j -> X_i is zero and im(Y_j -> Y_i) lies
/// in im f_i. Ind: ker f_i -> X_j is zero and im(Y_i -> Y_j) lies in
/// im f_j. Throws std::invalid_argument when f does not commute with the
/// transitions.
EquivalenceVerdict tower_equivalence(const Tower& x, const Tower& y, const std::vector<RMatrix>& f,
                                     std::size_t window);

}  // namespace wpr
