#include "wpr/tower.hpp"

#include <stdexcept>
#include <string>

namespace wpr {

Morphism Tower::transition(std::size_t i, std::size_t j) const {
  if (i < 1 || j > depth() || i > j) throw std::out_of_range("tower transition out of range");
  const RingPtr& ring = at(i).ring();
  RMatrix m = identity(at(i).generators());
  if (variance == Variance::Pro) {
    // X_j -> X_{j-1} -> ... -> X_i
    m = identity(at(j).generators());
    for (std::size_t k = j; k > i; --k) m = mul(ring, adjacent[k - 2], m);
    return Morphism{at(j), at(i), m};
  }
  for (std::size_t k = i; k < j; ++k) m = mul(ring, adjacent[k - 1], m);
  return Morphism{at(i), at(j), m};
}

Tower constant_tower(Variance v, const FpModule& m, std::size_t depth) {
  Tower t;
  t.variance = v;
  t.levels.assign(depth, m);
  for (std::size_t k = 1; k < depth; ++k) t.adjacent.push_back(identity(m.generators()));
  return t;
}

void validate(const Tower& t) {
  if (t.adjacent.size() + 1 != t.depth() && t.depth() != 0) throw std::invalid_argument("tower needs depth - 1 maps");
  for (std::size_t k = 0; k < t.adjacent.size(); ++k) {
    const FpModule& a = t.levels[k];
    const FpModule& b = t.levels[k + 1];
    Morphism m = t.variance == Variance::Pro ? Morphism{b, a, t.adjacent[k]} : Morphism{a, b, t.adjacent[k]};
    if (m.matrix.rows() != m.target.generators() || m.matrix.cols() != m.source.generators() ||
        !is_well_defined(m))
      throw std::invalid_argument("tower map between levels " + std::to_string(k + 1) + " and " +
                                  std::to_string(k + 2) + " is not well defined");
  }
}

CohomologyTower cohomology_tower(Variance v, const std::vector<Complex>& complexes,
                                 const std::vector<ComplexMorphism>& maps, int q) {
  CohomologyTower out;
  out.tower.variance = v;
  for (const auto& c : complexes) {
    out.cohomology.push_back(cohomology(c, q));
    out.tower.levels.push_back(out.cohomology.back().module);
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const Subquotient& lo = out.cohomology[k];
    const Subquotient& hi = out.cohomology[k + 1];
    Morphism m = v == Variance::Pro ? induced_map(maps[k], q, hi, lo) : induced_map(maps[k], q, lo, hi);
    out.tower.adjacent.push_back(m.matrix);
  }
  return out;
}

std::vector<RMatrix> induced_levels(const std::vector<ComplexMorphism>& f, int q, const CohomologyTower& source,
                                    const CohomologyTower& target) {
  std::vector<RMatrix> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(induced_map(f[i], q, source.cohomology[i], target.cohomology[i]).matrix);
  return out;
}

std::size_t required_levels(std::size_t depth, std::size_t window) { return depth / (1 + window); }

ProZeroVerdict is_pro_zero(const Tower& t, std::size_t window) {
  if (window < 1 || window >= t.depth()) throw std::invalid_argument("window must satisfy 1 <= w < depth");
  ProZeroVerdict v;
  v.pass = true;
  const std::size_t n = t.depth();
  for (std::size_t i = 1; i <= required_levels(n, window); ++i) {
    std::size_t found = 0;
    std::vector<std::size_t> nonzero;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (is_zero(t.transition(i, j))) {
        found = j;
        break;
      }
      nonzero.push_back(j);
    }
    v.certificates.push_back(found);
    if (!found && v.pass) {
      v.pass = false;
      v.witness = i;
      v.nonzero = std::move(nonzero);
    }
  }
  return v;
}

namespace {

bool columns_vanish(const FpModule& m, const RMatrix& cols) {
  for (std::size_t j = 0; j < cols.cols(); ++j)
    if (!m.is_zero_element(cols.column(j))) return false;
  return true;
}

}  // namespace

EquivalenceVerdict tower_equivalence(const Tower& x, const Tower& y, const std::vector<RMatrix>& f,
                                     std::size_t window) {
  const std::size_t n = x.depth();
  if (y.depth() != n || f.size() != n || x.variance != y.variance)
    throw std::invalid_argument("tower map needs towers of equal depth and variance");
  if (window < 1 || window >= n) throw std::invalid_argument("window must satisfy 1 <= w < depth");
  const RingPtr& ring = x.at(1).ring();
  std::vector<Morphism> fm;
  for (std::size_t i = 1; i <= n; ++i) fm.push_back(make_morphism(x.at(i), y.at(i), f[i - 1]));
  for (std::size_t i = 1; i < n; ++i) {
    Morphism tx = x.transition(i, i + 1), ty = y.transition(i, i + 1);
    const bool pro = x.variance == Variance::Pro;
    // pro: f_i tx = ty f_{i+1}; ind: f_{i+1} tx = ty f_i
    RMatrix lhs = mul(ring, pro ? f[i - 1] : f[i], tx.matrix);
    RMatrix rhs = mul(ring, ty.matrix, pro ? f[i] : f[i - 1]);
    const FpModule& tgt = pro ? y.at(i) : y.at(i + 1);
    if (!columns_vanish(tgt, subtract(lhs, rhs)))
      throw std::invalid_argument("tower map does not commute with transitions at level " + std::to_string(i));
  }

  EquivalenceVerdict v;
  v.pass = true;
  std::vector<Subquotient> kernels;
  for (const auto& m : fm) {
    kernels.push_back(kernel(m));
    v.bijective.push_back(is_zero(kernels.back().module) && is_zero(cokernel(m).module));
  }
  for (std::size_t i = 1; i <= required_levels(n, window); ++i) {
    std::size_t found = 0;
    for (std::size_t j = i; j <= n && !found; ++j) {
      Morphism tx = x.transition(i, j), ty = y.transition(i, j);
      bool ok;
      if (x.variance == Variance::Pro) {
        ok = columns_vanish(x.at(i), mul(ring, tx.matrix, kernels[j - 1].representatives)) &&
             submodule_contains(y.at(i), f[i - 1], ty.matrix);
      } else {
        ok = columns_vanish(x.at(j), mul(ring, tx.matrix, kernels[i - 1].representatives)) &&
             submodule_contains(y.at(j), f[j - 1], ty.matrix);
      }
      if (ok) found = j;
    }
    v.certificates.push_back(found);
    if (!found && v.pass) {
      v.pass = false;
      v.witness = i;
    }
  }
  return v;
}

}  // namespace wpr
