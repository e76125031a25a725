#pragma once

#include "wpr/integer.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wpr {

/// Indecomposable summands of the Z-modules handled in closed form.
struct ZSummand {
  enum class Kind { Integers, Localized, Rationals, Cyclic, Prufer };
  Kind kind = Kind::Integers;
  /// Cyclic: p^k; Prufer: Z(p^oo).
  long prime = 0;
  unsigned exponent = 0;
  /// Localized: Z[1/S], S sorted and nonempty.
  std::vector<long> inverted;

  static ZSummand integers() { return {}; }
  static ZSummand rationals() { return {Kind::Rationals, 0, 0, {}}; }
  static ZSummand cyclic(long p, unsigned k);
  static ZSummand prufer(long p);
  static ZSummand localized(std::vector<long> primes);

  std::string to_string() const;
  friend auto operator<=>(const ZSummand&, const ZSummand&) = default;
};

/// Finite direct sum of summands with multiplicities.
class ZModClass {
 public:
  ZModClass() = default;
  void add(const ZSummand& s, unsigned multiplicity = 1);
  const std::map<ZSummand, unsigned>& summands() const& { return parts_; }
  std::map<ZSummand, unsigned> summands() && { return std::move(parts_); }
  bool is_zero() const { return parts_.empty(); }
  /// Divisible, hence injective over Z: only Q and Z(p^oo) occur.
  bool is_injective() const;
  /// Orders of the cyclic summands (sorted) when the module is finite.
  std::string to_string() const;
  friend bool operator==(const ZModClass&, const ZModClass&) = default;

 private:
  std::map<ZSummand, unsigned> parts_;
};

/// Z/n decomposed into prime-power cyclic summands.
ZModClass cyclic_class(const Integer& n);
/// Prime-power orders of a finite class, sorted ascending; throws unless
/// the class is finite.
std::vector<Integer> elementary_divisors(const ZModClass& d);

/// Gamma_n(D): the p-primary parts for the primes p dividing n.
ZModClass zmod_gamma(const Integer& n, const ZModClass& d);
/// Hom(Z/n, D).
ZModClass zmod_hom(const Integer& n, const ZModClass& d);
/// Ext^1(Z/n, D) = D / nD.
ZModClass zmod_ext(const Integer& n, const ZModClass& d);
/// D[1/p].
ZModClass zmod_localize(const ZModClass& d, long p);

struct StabilityEntry {
  ZModClass module, torsion;
  /// Ext^1(Z/p^i, Gamma_p(I)) for i = 1..N.
  std::vector<ZModClass> ext_levels;
  bool pass = false;
};
struct StabilityVerdict {
  bool pass = true;
  std::vector<StabilityEntry> entries;
};
/// Throws std::invalid_argument on a non-injective test module or a
/// non-prime p.
StabilityVerdict weak_stability_check(long p, std::size_t depth, const std::vector<ZModClass>& injectives);

struct Thm45Verdict {
  bool pass = false;
  /// H^0 and H^1 of [I --p^i--> I] for i = 1..N, and of [I -> I[1/p]].
  std::vector<ZModClass> h0_levels, h1_levels;
  ZModClass h0_limit, h1_limit;
};
Thm45Verdict thm45_injective_test(long p, const ZModClass& injective, std::size_t depth);

}  // namespace wpr
