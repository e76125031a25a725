#pragma once

#include "wpr/groebner.hpp"
#include "wpr/integer.hpp"
#include "wpr/linalg.hpp"
#include "wpr/matrix.hpp"
#include "wpr/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wpr {

/// Element of a backend ring: an integer or a polynomial.
///
/// Integers double as constants inside polynomial rings, so generic code can
/// use `Elem(1)` and `Elem{}` as one and zero. Mixed arithmetic promotes the
/// integer into the polynomial's ring. Values are not reduced modulo a
/// quotient ideal; call Ring::normalize for canonical forms.
class Elem {
 public:
  Elem() = default;
  Elem(long v) : v_(Integer(v)) {}
  Elem(Integer v) : v_(std::move(v)) {}
  Elem(Polynomial p);

  bool holds_integer() const { return std::holds_alternative<Integer>(v_); }
  const Integer& integer() const { return std::get<Integer>(v_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(v_); }

  /// Zero as stored; over F_p or modulo an ideal use Ring::is_zero.
  bool is_zero() const;

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);

  std::string to_string() const;

 private:
  std::variant<Integer, Polynomial> v_;
};

using RMatrix = Matrix<Elem>;
using RVector = std::vector<Elem>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The integers, or a polynomial ring over Q / F_p, optionally modulo an
/// ideal (stored by its reduced Groebner basis).
class Ring {
 public:
  enum class Kind { Integers, Polynomial };

  static RingPtr integers();
  static RingPtr polynomial(PolyContextPtr ctx, const std::vector<Polynomial>& quotient = {});

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  const PolyContextPtr& context() const { return ctx_; }
  bool is_quotient() const { return !quotient_.generators.empty(); }
  const GroebnerBasis& quotient_basis() const { return quotient_; }
  /// Generators as given by the caller (for printing).
  const std::vector<Polynomial>& quotient_generators() const { return quotient_input_; }

  /// Canonical representative (integer, or polynomial normal form).
  Elem normalize(const Elem& a) const;
  RMatrix normalize(const RMatrix& m) const;
  RVector normalize(const RVector& v) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return is_zero(a - b); }
  bool is_zero(const RMatrix& m) const;

  /// Inverse of a unit that is visibly a unit: +-1 over Z, a nonzero
  /// constant over a polynomial ring.
  std::optional<Elem> obvious_inverse(const Elem& a) const;

  Elem parse(const std::string& text) const;
  std::string format(const Elem& a) const;
  /// "ZZ", "QQ[x,y]", "GF(5)[x,y,z]/(x^2, y)".
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring() = default;

  Kind kind_ = Kind::Integers;
  PolyContextPtr ctx_;
  GroebnerBasis quotient_;
  std::vector<Polynomial> quotient_input_;
};

/// The submodule of A^r spanned by the columns of a matrix (modulo the
/// quotient ideal, if any). Supports canonical reduction, membership,
/// coefficient lifting and syzygies.
class Span {
 public:
  /// With `track_lift` the underlying basis also records how each element
  /// arises from the generators (needed by lift and syzygies).
  Span(RingPtr ring, std::size_t rank, const RMatrix& generators, bool track_lift);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t generator_count() const { return ngens_; }

  /// Canonical representative of v modulo the span.
  RVector reduce(const RVector& v) const;
  bool contains(const RVector& v) const;
  /// Some c with G c = v (modulo the span's ring), if v lies in the span.
  std::optional<RVector> lift(const RVector& v) const;
  /// Columns generate {c : G c = 0}.
  RMatrix syzygies() const;
  /// Canonical generators of the span: Hermite rows over Z, the reduced
  /// Groebner basis (without quotient-ideal multiples) over polynomials.
  /// Only for spans built without lift tracking.
  RMatrix canonical_generators() const;

 private:
  RingPtr ring_;
  std::size_t rank_ = 0, ngens_ = 0;
  bool track_ = false;
  // Integer backend: Hermite data of G^T.
  IntMatrix hnf_, hnf_u_;
  std::vector<std::size_t> pivots_;
  IntMatrix int_gens_;
  // Polynomial backend.
  std::shared_ptr<ModuleGroebnerBasis> gb_;
};

RMatrix to_rmatrix(const IntMatrix& m);
/// Throws std::invalid_argument when an entry is not an integer.
IntMatrix to_intmatrix(const RMatrix& m);

RMatrix identity(std::size_t n);
RVector column_of(const RMatrix& m, std::size_t j);

}  // namespace wpr
