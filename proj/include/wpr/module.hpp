#pragma once

#include "wpr/ring.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace wpr {

/// coker(A^s -> A^g) for a g x s relation matrix.
class FpModule {
 public:
  FpModule() = default;
  FpModule(RingPtr ring, std::size_t generators, RMatrix relations, std::string name = {});

  static FpModule free(RingPtr ring, std::size_t rank, std::string name = {});
  static FpModule zero(RingPtr ring) { return free(std::move(ring), 0); }

  const RingPtr& ring() const { return ring_; }
  std::size_t generators() const { return gens_; }
  const RMatrix& relations() const { return rel_; }
  std::size_t relation_count() const { return rel_.cols(); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Span of the relations (cached, shared between copies).
  const Span& relation_span() const;

  /// Canonical representative of an element given in generator coordinates.
  RVector reduce(const RVector& v) const { return relation_span().reduce(v); }
  bool is_zero_element(const RVector& v) const { return relation_span().contains(v); }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<Span> span;
  };

  RingPtr ring_;
  std::size_t gens_ = 0;
  RMatrix rel_;
  std::string name_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool is_zero(const FpModule& m);

/// A smaller presentation of the same module together with the change of
/// generators: to_new (g' x g) sends old coordinates to new ones, to_old
/// (g x g') gives each new generator in old coordinates.
struct Minimized {
  FpModule module;
  RMatrix to_new, to_old;
};

/// Over Z the result is canonical (Smith form: torsion generators with
/// ascending invariant factors, then free generators). Over polynomial
/// rings unit pivots are eliminated, zero generators dropped and the
/// relations replaced by their reduced Groebner basis.
Minimized minimize(const FpModule& m);

/// Invariant factors with 0 for each free summand (Z only).
std::vector<Integer> invariant_factors(const FpModule& m);

/// A map given by a (target gens) x (source gens) matrix.
struct Morphism {
  FpModule source, target;
  RMatrix matrix;
};

/// Throws std::invalid_argument unless the matrix sends relations to
/// relations.
Morphism make_morphism(FpModule source, FpModule target, RMatrix matrix);
bool is_well_defined(const Morphism& f);
Morphism identity_morphism(const FpModule& m);
Morphism compose(const Morphism& g, const Morphism& f);
bool is_zero(const Morphism& f);
bool equal(const Morphism& f, const Morphism& g);

/// (G + Q + R_ambient) / (Q + R_ambient) for columns G, Q in the ambient
/// module's generator coordinates.
struct Subquotient {
  FpModule ambient;
  FpModule module;              // minimized presentation
  RMatrix representatives;      // ambient gens x module gens
  bool is_submodule = true;     // no extra relations

  /// Coordinates in `module` of an ambient element of G + Q + R_ambient.
  std::optional<RVector> coordinates(const RVector& v) const;
  /// Matrix of coordinates of the given ambient columns; throws when one
  /// of them does not lie in the subquotient.
  RMatrix coordinates(const RMatrix& columns) const;
  /// Inclusion into the ambient module (only for submodules).
  Morphism inclusion() const;

  std::shared_ptr<const Span> lifter;  // over [G | Q | R_ambient]
  RMatrix to_new;                      // module coords from G coords
  std::size_t raw_generators = 0;
};

Subquotient subquotient(const FpModule& ambient, const RMatrix& generators, const RMatrix& extra_relations = {});

Subquotient kernel(const Morphism& f);
Subquotient image(const Morphism& f);
/// Cokernel with projection target -> coker (to_new) and representatives.
Minimized cokernel(const Morphism& f);

FpModule direct_sum(const std::vector<FpModule>& parts);
FpModule tensor_module(const FpModule& m, const FpModule& n);
/// Hom(M, N) as a submodule of N^{g_M}; block j of a representative is the
/// image of generator j.
Subquotient hom_module(const FpModule& m, const FpModule& n);

/// All products of i generators (i >= 1).
std::vector<Elem> ideal_power(const RingPtr& ring, const std::vector<Elem>& gens, unsigned i);
/// (a_1^i, ..., a_n^i), i >= 1.
std::vector<Elem> power_sequence(const RingPtr& ring, const std::vector<Elem>& gens, unsigned i);
/// A / (gens).
FpModule quotient_module(const RingPtr& ring, const std::vector<Elem>& gens);
/// Whether f lies in the ideal generated by gens.
bool ideal_contains(const RingPtr& ring, const std::vector<Elem>& gens, const Elem& f);

/// {m in M : g m = 0 for every g in gens}, as a submodule of M.
Subquotient annihilator(const FpModule& m, const std::vector<Elem>& gens);

/// Whether span(b) is contained in span(a) + relations of M.
bool submodule_contains(const FpModule& m, const RMatrix& a, const RMatrix& b);
bool submodule_equal(const FpModule& m, const RMatrix& a, const RMatrix& b);

/// Multiplication of an ambient vector by a matrix, reduced by the ring.
RVector apply(const RingPtr& ring, const RMatrix& m, const RVector& v);
RMatrix mul(const RingPtr& ring, const RMatrix& a, const RMatrix& b);

}  // namespace wpr
