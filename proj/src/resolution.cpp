#include "wpr/resolution.hpp"

#include <stdexcept>
#include <string>

namespace wpr {

RMatrix irredundant_columns(const RingPtr& ring, const RMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = ring->is_zero(m(i, j));
    if (!zero) keep.push_back(j);
  }
  for (std::size_t pos = keep.size(); pos-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < keep.size(); ++k)
      if (k != pos) others.push_back(keep[k]);
    RMatrix rest = others.empty() ? RMatrix(m.rows(), 0) : select_cols(m, others);
    if (Span(ring, m.rows(), rest, false).contains(m.column(keep[pos]))) keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  if (keep.empty()) return RMatrix(m.rows(), 0);
  return select_cols(m, keep);
}

FreeResolution free_resolution(const FpModule& m, std::size_t max_length) {
  const RingPtr& ring = m.ring();
  Minimized mm = minimize(m);
  std::vector<RMatrix> maps;  // maps[k] : F_{k+1} -> F_k
  std::vector<std::size_t> ranks{mm.module.generators()};
  RMatrix current = mm.module.relations();
  if (!ring->is_integers()) current = irredundant_columns(ring, current);
  while (current.cols() > 0) {
    if (maps.size() >= max_length)
      throw BudgetExceeded("free resolution needs more than " + std::to_string(max_length) + " steps");
    maps.push_back(current);
    ranks.push_back(current.cols());
    RMatrix syz = Span(ring, current.rows(), current, true).syzygies();
    current = ring->is_integers() ? syz : irredundant_columns(ring, syz);
  }
  const std::size_t len = maps.size();
  std::vector<FpModule> mods;
  std::vector<RMatrix> diffs;
  for (std::size_t k = len + 1; k-- > 0;) mods.push_back(FpModule::free(ring, ranks[k]));
  for (std::size_t k = len; k-- > 0;) diffs.push_back(maps[k]);
  FreeResolution out;
  out.complex = Complex(ring, -static_cast<int>(len), std::move(mods), std::move(diffs));
  out.module = m;
  out.augmentation = mm.to_old;
  out.section = mm.to_new;
  out.length = len;
  return out;
}

Subquotient ext_module(const FpModule& m, const FpModule& n, int p, std::size_t max_length) {
  FreeResolution f = free_resolution(m, max_length);
  Complex h = hom_complex(f.complex, Complex::concentrated(n)).complex;
  return cohomology(h, p);
}

ComplexMorphism lift_chain_map(const Complex& f, const Complex& g, const RMatrix& phi0) {
  if (f.hi() > 0 || g.hi() > 0) throw std::invalid_argument("lift_chain_map expects complexes in degrees <= 0");
  const RingPtr& ring = f.ring();
  std::vector<RMatrix> maps{ring->normalize(phi0)};  // degree 0, -1, ...
  for (int q = -1; q >= f.lo(); --q) {
    RMatrix target = mul(ring, maps.back(), f.d(q));  // F^q -> G^{q+1}
    RMatrix dg = g.d(q);                               // G^q -> G^{q+1}
    const std::size_t gq = g.at(q).generators();
    RMatrix lifted(gq, f.at(q).generators());
    if (gq > 0) {
      Span span(ring, dg.rows(), dg, true);
      for (std::size_t j = 0; j < target.cols(); ++j) {
        auto c = span.lift(target.column(j));
        if (!c) throw std::invalid_argument("chain map does not lift in degree " + std::to_string(q));
        lifted.set_column(j, *c);
      }
    } else {
      for (std::size_t j = 0; j < target.cols(); ++j)
        for (std::size_t i = 0; i < target.rows(); ++i)
          if (!ring->is_zero(target(i, j)))
            throw std::invalid_argument("chain map does not lift in degree " + std::to_string(q));
    }
    maps.push_back(std::move(lifted));
  }
  std::vector<RMatrix> ordered(maps.rbegin(), maps.rend());
  return ComplexMorphism(f, g, f.lo(), std::move(ordered));
}

}  // namespace wpr
