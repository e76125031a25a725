#include "wpr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpr {
namespace {

// rows a, b <- [[s, t], [u, v]] * [row a; row b]
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(a, j), y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, a), y = m(i, b);
    m(i, a) = s * x + t * y;
    m(i, b) = u * x + v * y;
  }
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult r{m, identity_matrix<Integer>(m.rows(), Integer(1)), {}};
  IntMatrix& h = r.H;
  IntMatrix& u = r.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Fold every entry below `row` into the pivot via unimodular 2x2 steps.
    for (std::size_t k = row + 1; k < h.rows(); ++k) {
      if (h(k, col) == 0) continue;
      if (h(row, col) == 0) {
        h.swap_rows(row, k);
        u.swap_rows(row, k);
        continue;
      }
      Integer a = h(row, col), b = h(k, col);
      ExtendedGcd e = extended_gcd(a, b);
      Integer ag = a / e.g, bg = b / e.g;
      combine_rows(h, row, k, e.s, e.t, -bg, ag);
      combine_rows(u, row, k, e.s, e.t, -bg, ag);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(row, j) = -h(row, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(row, j) = -u(row, j);
    }
    const Integer p = h(row, col);
    for (std::size_t k = 0; k < row; ++k) {
      Integer q = floor_div(h(k, col), p);
      if (q == 0) continue;
      for (std::size_t j = 0; j < h.cols(); ++j) h(k, j) -= q * h(row, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) -= q * u(row, j);
    }
    r.pivots.push_back(col);
    ++row;
  }
  return r;
}

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k)
    if (D(k, k) != 0) out.push_back(D(k, k));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult r{identity_matrix<Integer>(m.rows(), Integer(1)), m,
              identity_matrix<Integer>(m.cols(), Integer(1))};
  IntMatrix& d = r.D;
  // Alternate row and column Hermite passes; each pass can only shrink the
  // leading pivots, so the process reaches a diagonal matrix.
  bool rows_turn = true;
  while (!is_diagonal(d)) {
    if (rows_turn) {
      HnfResult h = hermite_normal_form(d);
      d = h.H;
      r.U = multiply(h.U, r.U);
    } else {
      HnfResult h = hermite_normal_form(transpose(d));
      d = transpose(h.H);
      r.V = multiply(r.V, transpose(h.U));
    }
    rows_turn = !rows_turn;
  }
  const std::size_t n = std::min(d.rows(), d.cols());
  // Zeros trailing.
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (d(k, k) == 0) continue;
    if (k != next) {
      d.swap_rows(k, next);
      d.swap_cols(k, next);
      r.U.swap_rows(k, next);
      r.V.swap_cols(k, next);
    }
    ++next;
  }
  for (std::size_t k = 0; k < next; ++k) {
    if (d(k, k) < 0) {
      d(k, k) = -d(k, k);
      for (std::size_t j = 0; j < r.U.cols(); ++j) r.U(k, j) = -r.U(k, j);
    }
  }
  // Divisibility chain: diag(a, b) -> diag(gcd, lcm).
  for (std::size_t i = 0; i < next; ++i) {
    for (std::size_t j = i + 1; j < next; ++j) {
      const Integer a = d(i, i), b = d(j, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
      ExtendedGcd e = extended_gcd(a, b);
      Integer ag = a / e.g, bg = b / e.g;
      combine_rows(r.U, i, j, e.s, e.t, -bg, ag);
      // columns i, j of V <- V * [[1, -t*b/g], [1, s*a/g]]
      Integer tb = e.t * bg, sa = e.s * ag;
      combine_cols(r.V, i, j, Integer(1), Integer(1), -tb, sa);
      d(i, i) = e.g;
      d(j, j) = (a / e.g) * b;
    }
  }
  return r;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HnfResult h = hermite_normal_form(transpose(m));
  const std::size_t rank = h.pivots.size();
  const std::size_t n = m.cols();
  IntMatrix rows(n - rank, n);
  for (std::size_t k = rank; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) rows(k - rank, j) = h.U(k, j);
  return transpose(hermite_normal_form(rows).H);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), m_(rows, cols) {}

FieldMatrix::FieldMatrix(Field field, const Matrix<Rational>& entries)
    : field_(std::move(field)), m_(entries.rows(), entries.cols()) {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(i, j) = field_.normalize(entries(i, j));
}

RrefResult field_rref(const FieldMatrix& m) {
  const Field& f = m.field();
  Matrix<Rational> a = m.entries();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    Rational inv = f.inverse(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {FieldMatrix(f, a), pivots};
}

std::size_t field_rank(const FieldMatrix& m) { return field_rref(m).pivots.size(); }

FieldMatrix field_kernel(const FieldMatrix& m) {
  RrefResult r = field_rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FieldMatrix k(f, m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    k.set(free_cols[t], t, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k.set(r.pivots[i], t, f.neg(r.R(i, free_cols[t])));
  }
  return k;
}

std::optional<std::vector<Rational>> field_solve(const FieldMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("field_solve: dimension mismatch");
  const Field& f = m.field();
  Matrix<Rational> aug = hcat(m.entries(), Matrix<Rational>::from_columns(m.rows(), {b}));
  RrefResult r = field_rref(FieldMatrix(f, aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.R(i, m.cols());
  return x;
}

FieldMatrix field_multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field_multiply: field mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("field_multiply: dimension mismatch");
  return FieldMatrix(a.field(), multiply(a.entries(), b.entries()));
}

}  // namespace wpr
