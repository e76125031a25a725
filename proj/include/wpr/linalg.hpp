#pragma once

#include "wpr/field.hpp"
#include "wpr/integer.hpp"
#include "wpr/matrix.hpp"

#include <optional>
#include <vector>

namespace wpr {

using IntMatrix = Matrix<Integer>;

/// U * M * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... | d_r,
/// all d_k >= 0 and zeros trailing.
struct SnfResult {
  IntMatrix U, D, V;

  /// Nonzero diagonal entries d_1, ..., d_r.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

/// Row Hermite form: U * M = H.
struct HnfResult {
  IntMatrix H, U;
  /// Column index of the pivot in each nonzero row of H.
  std::vector<std::size_t> pivots;
};

HnfResult hermite_normal_form(const IntMatrix& m);

/// Smith form computed by alternating row and column Hermite reductions,
/// followed by a gcd/lcm pass that enforces the divisibility chain.
SnfResult smith_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {v : m v = 0}, returned in Hermite form
/// (as rows of the transpose), so the result is canonical.
IntMatrix integer_kernel(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Matrix over Q or F_p with entries in lowest terms (positive denominator)
/// or in [0, p) respectively.
class FieldMatrix {
 public:
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);
  FieldMatrix(Field field, const Matrix<Rational>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, const Rational& v) { m_(i, j) = field_.normalize(v); }
  const Matrix<Rational>& entries() const { return m_; }

 private:
  Field field_;
  Matrix<Rational> m_;
};

/// Reduced row echelon form; pivot columns are reported in increasing order.
struct RrefResult {
  FieldMatrix R;
  std::vector<std::size_t> pivots;
};

RrefResult field_rref(const FieldMatrix& m);
std::size_t field_rank(const FieldMatrix& m);
/// Columns form a basis of the right kernel.
FieldMatrix field_kernel(const FieldMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent. Throws on dimension
/// mismatch.
std::optional<std::vector<Rational>> field_solve(const FieldMatrix& m, const std::vector<Rational>& b);
FieldMatrix field_multiply(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace wpr
