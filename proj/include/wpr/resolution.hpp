#pragma once

#include "wpr/complex.hpp"
#include "wpr/errors.hpp"

namespace wpr {

/// Free resolution ... -> F_1 -> F_0 stored as a complex in degrees
/// [-length, 0], with the augmentation F_0 -> M.
struct FreeResolution {
  Complex complex;
  FpModule module;
  /// (generators of M) x (rank F_0).
  RMatrix augmentation;
  /// (rank F_0) x (generators of M), inverse to the augmentation modulo
  /// relations.
  RMatrix section;
  std::size_t length = 0;
};

/// Over Z the presentation is first put in Smith form, so length <= 1.
/// Over polynomial rings each syzygy matrix is pruned to an irredundant
/// generating set (minimal for homogeneous input). Throws BudgetExceeded
/// when more than max_length steps would be needed.
FreeResolution free_resolution(const FpModule& m, std::size_t max_length = 16);

/// Ext^p(M, N) = H^p(Hom(F, N)).
Subquotient ext_module(const FpModule& m, const FpModule& n, int p, std::size_t max_length = 16);

/// Lifts phi0 : F^0 -> G^0 to a chain map F -> G between free complexes
/// concentrated in degrees <= 0, G exact in negative degrees. phi0 must
/// send boundaries of F into boundaries of G.
ComplexMorphism lift_chain_map(const Complex& f, const Complex& g, const RMatrix& phi0);

/// Removes columns that lie in the span of the remaining ones.
RMatrix irredundant_columns(const RingPtr& ring, const RMatrix& m);

}  // namespace wpr
