#include "wpr/koszul.hpp"

#include <stdexcept>

namespace wpr {
namespace {

Complex unit_complex(const RingPtr& ring) { return Complex::concentrated(FpModule::free(ring, 1)); }

RMatrix one_by_one(const Elem& a) { return RMatrix(1, 1, a); }

Complex single(const RingPtr& ring, const Elem& a) {
  return Complex(ring, -1, {FpModule::free(ring, 1), FpModule::free(ring, 1)}, {one_by_one(a)});
}

}  // namespace

Elem power(const RingPtr& ring, const Elem& a, unsigned e) {
  Elem out(1);
  for (unsigned k = 0; k < e; ++k) out = ring->normalize(out * a);
  return out;
}

Complex koszul_complex(const RingPtr& ring, const Sequence& seq) {
  Complex k = unit_complex(ring);
  for (std::size_t idx = 0; idx < seq.size(); ++idx) {
    Complex s = single(ring, ring->normalize(seq[idx]));
    k = idx == 0 ? s : tensor(k, s);
  }
  return k;
}

ComplexMorphism koszul_transition(const RingPtr& ring, const Sequence& seq, unsigned j, unsigned i) {
  if (i < 1 || j < i) throw std::invalid_argument("koszul_transition needs j >= i >= 1");
  if (seq.empty()) return identity_morphism(unit_complex(ring));
  std::optional<ComplexMorphism> out;
  for (const auto& a : seq) {
    Complex src = single(ring, power(ring, a, j)), tgt = single(ring, power(ring, a, i));
    ComplexMorphism t(src, tgt, -1, {one_by_one(power(ring, a, j - i)), one_by_one(Elem(1))});
    out = out ? tensor(*out, t) : t;
  }
  return *out;
}

Complex dual_koszul(const RingPtr& ring, const Sequence& seq, unsigned i) {
  Sequence p;
  for (const auto& a : seq) p.push_back(power(ring, a, i));
  return hom_complex(koszul_complex(ring, p), unit_complex(ring)).complex;
}

ComplexMorphism dual_koszul_transition(const RingPtr& ring, const Sequence& seq, unsigned i, unsigned j) {
  return hom_precompose(koszul_transition(ring, seq, j, i), unit_complex(ring));
}

ComplexMorphism dual_koszul_augmentation(const RingPtr& ring, const Sequence& seq, unsigned i) {
  return ComplexMorphism(dual_koszul(ring, seq, i), unit_complex(ring), 0, {one_by_one(Elem(1))});
}

ComplexMorphism koszul_coaugmentation(const RingPtr& ring, const Sequence& seq, unsigned i) {
  Sequence p;
  for (const auto& a : seq) p.push_back(power(ring, a, i));
  return ComplexMorphism(unit_complex(ring), koszul_complex(ring, p), 0, {one_by_one(Elem(1))});
}

CohomologyTower koszul_cohomology_prosystem(const RingPtr& ring, const Sequence& seq, int p, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::vector<Complex> cs;
  std::vector<ComplexMorphism> maps;
  for (unsigned i = 1; i <= depth; ++i) {
    Sequence s;
    for (const auto& a : seq) s.push_back(power(ring, a, i));
    cs.push_back(koszul_complex(ring, s));
    if (i > 1) maps.push_back(koszul_transition(ring, seq, i, i - 1));
  }
  return cohomology_tower(Variance::Pro, cs, maps, p);
}

WprVerdict weak_proregularity_check(const RingPtr& ring, const Sequence& seq, std::size_t depth,
                                    std::size_t window) {
  if (depth < 2) throw std::invalid_argument("weak proregularity check needs depth >= 2");
  WprVerdict v;
  const int n = static_cast<int>(seq.size());
  for (int p = -n; p <= -1; ++p) {
    ProZeroVerdict z = is_pro_zero(koszul_cohomology_prosystem(ring, seq, p, depth).tower, window);
    v.pass = v.pass && z.pass;
    v.degrees.emplace_back(p, std::move(z));
  }
  return v;
}

RadicalInvarianceVerdict radical_invariance_suite(const RingPtr& ring, const Sequence& first, const Sequence& second,
                                                  std::size_t depth, std::size_t window, unsigned exponent_bound) {
  auto inside = [&](const Sequence& gens, const Sequence& ideal) {
    for (const auto& g : gens) {
      bool found = false;
      for (unsigned e = 1; e <= exponent_bound && !found; ++e) found = ideal_contains(ring, ideal, power(ring, g, e));
      if (!found) return false;
    }
    return true;
  };
  if (!inside(first, second) || !inside(second, first))
    throw std::invalid_argument("radicals differ within exponent bound " + std::to_string(exponent_bound));
  RadicalInvarianceVerdict out;
  out.first = weak_proregularity_check(ring, first, depth, window);
  out.second = weak_proregularity_check(ring, second, depth, window);
  out.agree = out.first.pass == out.second.pass;
  return out;
}

IdempotenceVerdict copointed_idempotence_check(const RingPtr& ring, const Sequence& seq, std::size_t depth,
                                               std::size_t window) {
  const Complex unit = unit_complex(ring);
  const ComplexMorphism unit_id = identity_morphism(unit);
  std::vector<Complex> pp, left_t, right_t;
  std::vector<ComplexMorphism> pp_maps, left_maps, right_maps, left_f, right_f;
  for (unsigned i = 1; i <= depth; ++i) {
    ComplexMorphism rho = dual_koszul_augmentation(ring, seq, i);
    ComplexMorphism id = identity_morphism(rho.source());
    pp.push_back(tensor(rho.source(), rho.source()));
    left_f.push_back(tensor(rho, id));
    right_f.push_back(tensor(id, rho));
    left_t.push_back(left_f.back().target());
    right_t.push_back(right_f.back().target());
    if (i > 1) {
      ComplexMorphism t = dual_koszul_transition(ring, seq, i - 1, i);
      pp_maps.push_back(tensor(t, t));
      left_maps.push_back(tensor(unit_id, t));
      right_maps.push_back(tensor(t, unit_id));
    }
  }
  IdempotenceVerdict v;
  const int n = static_cast<int>(seq.size());
  for (int q = 0; q <= 2 * n; ++q) {
    CohomologyTower src = cohomology_tower(Variance::Ind, pp, pp_maps, q);
    CohomologyTower lt = cohomology_tower(Variance::Ind, left_t, left_maps, q);
    CohomologyTower rt = cohomology_tower(Variance::Ind, right_t, right_maps, q);
    IdempotenceDegree l{q, tower_equivalence(src.tower, lt.tower, induced_levels(left_f, q, src, lt), window)};
    IdempotenceDegree r{q, tower_equivalence(src.tower, rt.tower, induced_levels(right_f, q, src, rt), window)};
    v.pass = v.pass && l.verdict.pass && r.verdict.pass;
    v.left.push_back(std::move(l));
    v.right.push_back(std::move(r));
  }
  return v;
}

}  // namespace wpr
