#pragma once

#include "wpr/module.hpp"

#include <string>
#include <vector>

namespace testing_support {

using namespace wpr;

inline RingPtr ZZ() { return Ring::integers(); }

inline RingPtr poly(Field f, std::vector<std::string> vars, const std::vector<std::string>& quotient = {}) {
  auto ctx = std::make_shared<const PolyContext>(f, std::move(vars));
  std::vector<Polynomial> q;
  for (const auto& s : quotient) q.push_back(parse_polynomial(s, ctx));
  return Ring::polynomial(ctx, q);
}

inline RingPtr qq(std::vector<std::string> vars, const std::vector<std::string>& quotient = {}) {
  return poly(Field(), std::move(vars), quotient);
}

/// Q[x, e_1..e_n] / (e_i x^i, e_i e_j for i <= j).
inline RingPtr witness_ring(int n) {
  std::vector<std::string> vars{"x"};
  std::vector<std::string> rel;
  for (int i = 1; i <= n; ++i) vars.push_back("e" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    rel.push_back("e" + std::to_string(i) + "*x^" + std::to_string(i));
    for (int j = i; j <= n; ++j) rel.push_back("e" + std::to_string(i) + "*e" + std::to_string(j));
  }
  return qq(vars, rel);
}

inline FpModule zmod(std::vector<long> orders) {
  RMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = Elem(orders[i]);
  return FpModule(ZZ(), orders.size(), rel);
}

inline std::vector<Elem> elems(const RingPtr& r, const std::vector<std::string>& s) {
  std::vector<Elem> out;
  for (const auto& t : s) out.push_back(r->parse(t));
  return out;
}

inline std::vector<Integer> factors(const FpModule& m) { return invariant_factors(m); }

inline Integer pow2(unsigned i) { return Integer(1) << i; }

inline bool bijective(const Morphism& m) { return is_zero(kernel(m).module) && is_zero(cokernel(m).module); }

}  // namespace testing_support

namespace testing_support {

/// All monomials of total degree d in the ring variables, as strings.
inline std::vector<std::string> monomials(const std::vector<std::string>& vars, unsigned d) {
  if (vars.empty()) return d == 0 ? std::vector<std::string>{"1"} : std::vector<std::string>{};
  std::vector<std::string> out;
  std::vector<std::string> rest(vars.begin() + 1, vars.end());
  for (unsigned e = 0; e <= d; ++e)
    for (const auto& tail : monomials(rest, d - e))
      out.push_back(vars[0] + "^" + std::to_string(e) + "*" + tail);
  return out;
}

/// Dimension over the coefficient field of a finite-dimensional module,
/// counting standard monomials (those equal to their own normal form).
/// Returns -1 when some monomial of degree max_degree + 1 is standard.
inline long field_dimension(const FpModule& m, unsigned max_degree) {
  const RingPtr& r = m.ring();
  const auto& vars = r->context()->variables();
  long count = 0;
  for (unsigned d = 0; d <= max_degree + 1; ++d)
    for (const auto& mono : monomials(vars, d))
      for (std::size_t c = 0; c < m.generators(); ++c) {
        RVector v(m.generators(), Elem(0));
        v[c] = r->parse(mono);
        if (m.reduce(v) == r->normalize(v)) {
          if (d == max_degree + 1) return -1;
          ++count;
        }
      }
  return count;
}

}  // namespace testing_support

namespace testing_support {

/// Matrix of ring elements from rows of strings.
inline RMatrix rmatrix(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  RMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = r->parse(rows[i][j]);
  return m;
}

}  // namespace testing_support
