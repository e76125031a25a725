#pragma once

#include "wpr/module.hpp"

#include <cstdint>
#include <vector>

namespace wpr {

/// Bounded cochain complex C^lo -> ... -> C^hi of finitely presented
/// modules. The differential d^q : C^q -> C^{q+1} is a matrix in generator
/// coordinates; d^{q+1} d^q = 0 is verified on construction.
class Complex {
 public:
  Complex() = default;
  /// `differentials[k]` is d^{lo+k}; there are modules.size() - 1 of them.
  /// Throws std::invalid_argument naming the offending degree when a
  /// differential is ill-defined or d o d != 0.
  Complex(RingPtr ring, int lo, std::vector<FpModule> modules, std::vector<RMatrix> differentials);

  /// M placed in a single degree.
  static Complex concentrated(const FpModule& m, int degree = 0);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  /// C^q, the zero module outside [lo, hi].
  const FpModule& at(int q) const;
  /// d^q : C^q -> C^{q+1} (a zero matrix outside the range).
  RMatrix d(int q) const;
  bool is_free() const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<FpModule> modules_;
  std::vector<RMatrix> diffs_;
  FpModule zero_;
};

/// Degreewise maps C^q -> D^q commuting with the differentials.
class ComplexMorphism {
 public:
  ComplexMorphism() = default;
  /// `maps[k]` is the component in degree lo + k; missing degrees are zero.
  /// Throws std::invalid_argument when a component is ill-defined or a
  /// square does not commute.
  ComplexMorphism(Complex source, Complex target, int lo, std::vector<RMatrix> maps);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  RMatrix at(int q) const;

 private:
  Complex source_, target_;
  int lo_ = 0;
  std::vector<RMatrix> maps_;
};

ComplexMorphism identity_morphism(const Complex& c);
ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);

/// H^q(C) as a subquotient of C^q.
Subquotient cohomology(const Complex& c, int q);
/// The map H^q(C) -> H^q(D), given both cohomology modules.
Morphism induced_map(const ComplexMorphism& f, int q, const Subquotient& hs, const Subquotient& ht);
Morphism induced_map(const ComplexMorphism& f, int q);

/// Total tensor complex; (C (x) D)^k lists the blocks C^i (x) D^{k-i} by
/// ascending i, and d = d_C (x) 1 + (-1)^i 1 (x) d_D.
Complex tensor(const Complex& c, const Complex& d);
/// f (x) g for chain maps (no signs: both have degree zero).
ComplexMorphism tensor(const ComplexMorphism& f, const ComplexMorphism& g);

/// Hom^k = prod_i Hom(C^i, D^{i+k}) with d f = d_D f - (-1)^k f d_C. A
/// component Hom(A^g, N) is stored as N^g, block j holding the image of
/// generator j. When some C^i is not free the components are the Hom
/// modules of the presentations and `underived` is set.
struct HomComplex {
  Complex complex;
  bool underived = false;
};
HomComplex hom_complex(const Complex& c, const Complex& d);
/// Precomposition Hom(C, D) -> Hom(C', D) with t : C' -> C (free sources).
ComplexMorphism hom_precompose(const ComplexMorphism& t, const Complex& d);
/// Postcomposition Hom(C, D) -> Hom(C, D') with s : D -> D' (free C).
ComplexMorphism hom_postcompose(const Complex& c, const ComplexMorphism& s);

/// C[k]: degree q holds C^{q+k}, differential (-1)^k d.
Complex shift(const Complex& c, int k);
/// cone(f)^k = C^{k+1} + D^k with d(x, y) = (-d_C x, f x + d_D y).
Complex cone(const ComplexMorphism& f);

struct QuasiIsoVerdict {
  bool quasi_isomorphism = true;
  /// (degree, cone cohomology is zero) for every degree of the cone.
  std::vector<std::pair<int, bool>> degrees;
};
QuasiIsoVerdict is_quasi_iso(const ComplexMorphism& f);

/// Counters for the d o d = 0 verification performed at construction.
struct ComplexAudit {
  static std::uint64_t checked();
  static std::uint64_t failures();
  static void reset();
};

}  // namespace wpr
