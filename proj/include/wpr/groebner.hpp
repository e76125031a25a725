#pragma once

#include "wpr/polynomial.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace wpr {

/// Term c * m * e_comp of a free module over a polynomial ring.
struct ModuleTerm {
  Rational coeff;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Element of a free module, terms sorted descending in position-over-term
/// order: lower component index first, then the ring's monomial order.
struct ModuleVector {
  std::vector<ModuleTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const ModuleTerm& lead() const { return terms.front(); }
};

ModuleVector to_module_vector(const std::vector<Polynomial>& column, std::uint32_t first_comp = 0);
std::vector<Polynomial> to_polynomials(const PolyContextPtr& ctx, const ModuleVector& v, std::size_t rank,
                                       std::uint32_t first_comp = 0);

/// Reduced Groebner basis of a submodule of a free module (POT order).
///
/// Components below `elimination_rank` dominate every other component, which
/// is what the syzygy and lifting constructions rely on.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(PolyContextPtr ctx, std::vector<ModuleVector> generators);

  const PolyContextPtr& context() const { return ctx_; }
  const std::vector<ModuleVector>& elements() const { return basis_; }

  /// Normal form of v; terms whose component is >= stop_comp are left
  /// untouched (and leading terms there are not reduced).
  ModuleVector reduce(ModuleVector v, std::uint32_t stop_comp = UINT32_MAX) const;

  /// All S-vectors reduce to zero.
  bool verify() const;

 private:
  void compute(std::vector<ModuleVector> gens);
  void finalize();

  PolyContextPtr ctx_;
  std::vector<ModuleVector> basis_;
};

/// Reduced Groebner basis of an ideal.
struct GroebnerBasis {
  PolyContextPtr ctx;
  std::vector<Polynomial> generators;

  MonomialOrder order() const { return ctx->order(); }
};

/// Throws std::invalid_argument on empty input or mixed rings.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators);
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, MonomialOrder order);

/// Remainder of f modulo G; throws std::invalid_argument when f does not
/// live in G's ring (field and variables; the term order is converted).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

/// Re-express a polynomial in a ring that differs only in term order.
Polynomial change_order(const Polynomial& f, const PolyContextPtr& target);

/// Optional self-check applied to every basis the engine emits.
struct GroebnerAudit {
  static void enable(bool on);
  static bool enabled();
  static std::uint64_t checked();
  static std::uint64_t failures();
  static void reset();
};

}  // namespace wpr
