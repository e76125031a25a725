#include "wpr/torsion.hpp"

#include <stdexcept>
#include <string>

namespace wpr {
namespace {

Sequence powered(const RingPtr& ring, const Sequence& a, unsigned i) {
  Sequence out;
  for (const auto& x : a) out.push_back(power(ring, x, i));
  return out;
}

Complex unit_complex(const RingPtr& ring) { return Complex::concentrated(FpModule::free(ring, 1)); }

// Relations x * e_j for every x in gens and generator e_j.
RMatrix scaled_generators(const RingPtr& ring, const std::vector<Elem>& gens, std::size_t g) {
  RMatrix out(g, gens.size() * g);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t j = 0; j < g; ++j) out(j, k * g + j) = ring->normalize(gens[k]);
  return out;
}

QuotientTower quotient_tower(const FpModule& m, const std::vector<std::vector<Elem>>& ideals) {
  const RingPtr& ring = m.ring();
  const std::size_t g = m.generators();
  QuotientTower out;
  out.tower.variance = Variance::Pro;
  std::vector<Minimized> mins;
  for (const auto& ideal : ideals) {
    FpModule q(ring, g, hcat(m.relations(), scaled_generators(ring, ideal, g)));
    mins.push_back(minimize(q));
    out.tower.levels.push_back(mins.back().module);
    out.projections.push_back(mins.back().to_new);
  }
  for (std::size_t k = 1; k < mins.size(); ++k)
    out.tower.adjacent.push_back(mul(ring, mins[k - 1].to_new, mins[k].to_old));
  return out;
}

// Wraps the components of h as a morphism between the given complexes.
ComplexMorphism rewrap(const ComplexMorphism& h, const Complex& src, const Complex& tgt) {
  const int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
  std::vector<RMatrix> maps;
  for (int q = lo; q <= hi; ++q) {
    RMatrix m = h.at(q);
    if (m.rows() != tgt.at(q).generators() || m.cols() != src.at(q).generators())
      m = RMatrix(tgt.at(q).generators(), src.at(q).generators());
    maps.push_back(std::move(m));
  }
  return ComplexMorphism(src, tgt, lo, std::move(maps));
}

CohomologyTower constant_cohomology(Variance v, const Complex& c, int q, std::size_t depth) {
  CohomologyTower out;
  Subquotient h = cohomology(c, q);
  out.cohomology.assign(depth, h);
  out.tower = constant_tower(v, h.module, depth);
  return out;
}

}  // namespace

GammaResult gamma(const FpModule& m, const Sequence& a, std::size_t max_stabilization) {
  const RingPtr& ring = m.ring();
  Subquotient prev = annihilator(m, ideal_power(ring, a, 1));
  for (std::size_t s = 1; s <= max_stabilization; ++s) {
    Subquotient next = annihilator(m, ideal_power(ring, a, static_cast<unsigned>(s + 1)));
    if (submodule_contains(m, prev.representatives, next.representatives)) return GammaResult{std::move(prev), s};
    prev = std::move(next);
  }
  throw BudgetExceeded("torsion submodule did not stabilize within " + std::to_string(max_stabilization) +
                       " steps");
}

bool gamma_idempotence(const FpModule& m, const Sequence& a, std::size_t max_stabilization) {
  GammaResult g = gamma(m, a, max_stabilization);
  GammaResult gg = gamma(g.submodule.module, a, max_stabilization);
  RMatrix inner = mul(m.ring(), g.submodule.representatives, gg.submodule.representatives);
  if (inner.rows() != m.generators()) inner = RMatrix(m.generators(), 0);
  return submodule_equal(m, g.submodule.representatives, inner);
}

CohomologyTower ext_torsion_tower(const FpModule& m, const Sequence& a, int p, std::size_t depth) {
  const RingPtr& ring = m.ring();
  const Complex m0 = Complex::concentrated(m);
  std::vector<FreeResolution> res;
  std::vector<Complex> homs;
  std::vector<ComplexMorphism> maps;
  for (unsigned i = 1; i <= depth; ++i) {
    res.push_back(free_resolution(quotient_module(ring, ideal_power(ring, a, i))));
    homs.push_back(hom_complex(res.back().complex, m0).complex);
    if (i > 1) {
      const FreeResolution& lo = res[i - 2];
      const FreeResolution& hi = res[i - 1];
      RMatrix phi0 = mul(ring, lo.section, hi.augmentation);
      if (phi0.rows() != lo.complex.at(0).generators() || phi0.cols() != hi.complex.at(0).generators())
        phi0 = RMatrix(lo.complex.at(0).generators(), hi.complex.at(0).generators());
      ComplexMorphism t = lift_chain_map(hi.complex, lo.complex, phi0);
      maps.push_back(rewrap(hom_precompose(t, m0), homs[i - 2], homs[i - 1]));
    }
  }
  return cohomology_tower(Variance::Ind, homs, maps, p);
}

CohomologyTower koszul_torsion_tower(const FpModule& m, const Sequence& a, int p, std::size_t depth) {
  const RingPtr& ring = m.ring();
  const Complex m0 = Complex::concentrated(m);
  const ComplexMorphism id = identity_morphism(m0);
  std::vector<Complex> cs;
  std::vector<ComplexMorphism> maps;
  for (unsigned i = 1; i <= depth; ++i) {
    cs.push_back(tensor(dual_koszul(ring, a, i), m0));
    if (i > 1) maps.push_back(tensor(dual_koszul_transition(ring, a, i - 1, i), id));
  }
  return cohomology_tower(Variance::Ind, cs, maps, p);
}

TorsionComparison compare_torsion_towers(const FpModule& m, const Sequence& a, int p, std::size_t depth,
                                         std::size_t window) {
  const RingPtr& ring = m.ring();
  const Complex m0 = Complex::concentrated(m);
  TorsionComparison out;
  out.ext = ext_torsion_tower(m, a, p, depth);
  out.koszul = koszul_torsion_tower(m, a, p, depth);
  std::vector<ComplexMorphism> f;
  for (unsigned i = 1; i <= depth; ++i) {
    FreeResolution r = free_resolution(quotient_module(ring, ideal_power(ring, a, i)));
    Complex k = koszul_complex(ring, powered(ring, a, i));
    RMatrix phi0 = r.section.rows() == r.complex.at(0).generators() ? r.section : RMatrix(r.complex.at(0).generators(), 1);
    ComplexMorphism c = lift_chain_map(k, r.complex, phi0);
    Complex src = hom_complex(r.complex, m0).complex;
    Complex tgt = tensor(dual_koszul(ring, a, i), m0);
    f.push_back(rewrap(hom_precompose(c, m0), src, tgt));
  }
  out.levels = induced_levels(f, p, out.ext, out.koszul);
  out.verdict = tower_equivalence(out.ext.tower, out.koszul.tower, out.levels, window);
  return out;
}

KoszulGamma koszul_gamma(const FpModule& m, const Sequence& a, std::size_t max_stabilization) {
  const RingPtr& ring = m.ring();
  const Complex m0 = Complex::concentrated(m);
  for (std::size_t i = 1; i <= max_stabilization; ++i) {
    Subquotient h = cohomology(tensor(dual_koszul(ring, a, static_cast<unsigned>(i)), m0), 0);
    RMatrix reps = h.representatives.rows() == m.generators() ? h.representatives : RMatrix(m.generators(), 0);
    // stable once the submodule is saturated: (S :_M a) = S
    FpModule quotient(ring, m.generators(), hcat(m.relations(), reps));
    Subquotient sat = annihilator(quotient, a);
    if (submodule_contains(m, reps, sat.representatives)) return KoszulGamma{subquotient(m, reps), i};
  }
  throw BudgetExceeded("Koszul torsion tower did not stabilize within " + std::to_string(max_stabilization) +
                       " steps");
}

QuotientTower completion_tower(const FpModule& m, const Sequence& a, std::size_t depth) {
  std::vector<std::vector<Elem>> ideals;
  for (unsigned i = 1; i <= depth; ++i) ideals.push_back(ideal_power(m.ring(), a, i));
  return quotient_tower(m, ideals);
}

QuotientTower profinite_tower(const FpModule& m, const std::vector<Integer>& chain) {
  if (!m.ring()->is_integers()) throw std::invalid_argument("profinite tower needs a module over ZZ");
  std::vector<std::vector<Elem>> ideals;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k] <= 0) throw std::invalid_argument("profinite chain entries must be positive");
    if (k > 0 && chain[k] % chain[k - 1] != 0)
      throw std::invalid_argument("profinite chain is not a divisibility chain at position " + std::to_string(k + 1));
    ideals.push_back({Elem(chain[k])});
  }
  return quotient_tower(m, ideals);
}

std::vector<DegreeTower> derived_completion_tower(const Complex& c, const Sequence& a, std::size_t depth) {
  for (int q = c.lo(); q <= c.hi(); ++q)
    if (!c.at(q).ring()->is_zero(c.at(q).relations()))
      throw std::invalid_argument("derived completion needs a free complex; degree " + std::to_string(q) +
                                  " is not free");
  const RingPtr& ring = c.ring();
  const ComplexMorphism id = identity_morphism(c);
  std::vector<Complex> cs;
  std::vector<ComplexMorphism> maps;
  for (unsigned i = 1; i <= depth; ++i) {
    cs.push_back(tensor(c, koszul_complex(ring, powered(ring, a, i))));
    if (i > 1) maps.push_back(tensor(id, koszul_transition(ring, a, i, i - 1)));
  }
  std::vector<DegreeTower> out;
  const int n = static_cast<int>(a.size());
  for (int q = c.lo() - n; q <= c.hi(); ++q) out.push_back(DegreeTower{q, cohomology_tower(Variance::Pro, cs, maps, q)});
  return out;
}

MgmVerdict mgm_check(const FpModule& m, const Sequence& a, std::size_t depth, std::size_t window) {
  const RingPtr& ring = m.ring();
  if (!weak_proregularity_check(ring, a, depth, window).pass)
    throw std::invalid_argument("mgm check needs a weakly proregular sequence at this depth and window");
  const Complex m0 = Complex::concentrated(m);
  const Complex unit = unit_complex(ring);
  const int n = static_cast<int>(a.size());
  const std::size_t req = required_levels(depth, window);
  MgmVerdict v;

  for (unsigned k = 1; k <= req; ++k) {
    const Complex s = tensor(dual_koszul(ring, a, k), m0);
    const ComplexMorphism sid = identity_morphism(s);
    const Complex s0 = tensor(s, unit);
    std::vector<Complex> ts;
    std::vector<ComplexMorphism> maps, f;
    for (unsigned i = 1; i <= depth; ++i) {
      f.push_back(tensor(sid, koszul_coaugmentation(ring, a, i)));
      ts.push_back(f.back().target());
      if (i > 1) maps.push_back(tensor(sid, koszul_transition(ring, a, i, i - 1)));
    }
    for (int p = -n; p <= n; ++p) {
      CohomologyTower src = constant_cohomology(Variance::Pro, s0, p, depth);
      CohomologyTower tgt = cohomology_tower(Variance::Pro, ts, maps, p);
      MgmEntry e{k, p, tower_equivalence(src.tower, tgt.tower, induced_levels(f, p, src, tgt), window)};
      v.tau_pass = v.tau_pass && e.verdict.pass;
      v.tau.push_back(std::move(e));
    }
  }

  for (unsigned i = 1; i <= req; ++i) {
    const Complex z = tensor(m0, koszul_complex(ring, powered(ring, a, i)));
    const ComplexMorphism zid = identity_morphism(z);
    std::vector<Complex> us;
    std::vector<ComplexMorphism> maps, g;
    for (unsigned k = 1; k <= depth; ++k) {
      g.push_back(tensor(dual_koszul_augmentation(ring, a, k), zid));
      us.push_back(g.back().source());
      if (k > 1) maps.push_back(tensor(dual_koszul_transition(ring, a, k - 1, k), zid));
    }
    const Complex z0 = g.front().target();
    for (int p = -n; p <= n; ++p) {
      CohomologyTower src = cohomology_tower(Variance::Ind, us, maps, p);
      CohomologyTower tgt = constant_cohomology(Variance::Ind, z0, p, depth);
      MgmEntry e{i, p, tower_equivalence(src.tower, tgt.tower, induced_levels(g, p, src, tgt), window)};
      v.sigma_pass = v.sigma_pass && e.verdict.pass;
      v.sigma.push_back(std::move(e));
    }
  }
  return v;
}

}  // namespace wpr
