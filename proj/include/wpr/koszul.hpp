#pragma once

#include "wpr/tower.hpp"

#include <utility>
#include <vector>

namespace wpr {

using Sequence = std::vector<Elem>;

/// a^e computed in the ring.
Elem power(const RingPtr& ring, const Elem& a, unsigned e);

/// K(A; a_1) (x) ... (x) K(A; a_n), free in degrees [-n, 0].
Complex koszul_complex(const RingPtr& ring, const Sequence& seq);
/// K(A; seq^j) -> K(A; seq^i) for j >= i >= 1: identity in degree 0,
/// multiplication by a_k^{j-i} in degree -1, tensor products below.
ComplexMorphism koszul_transition(const RingPtr& ring, const Sequence& seq, unsigned j, unsigned i);

/// K^v(A; seq^i) = Hom(K(A; seq^i), A), free in degrees [0, n].
Complex dual_koszul(const RingPtr& ring, const Sequence& seq, unsigned i);
/// K^v(A; seq^i) -> K^v(A; seq^j), i <= j, dual to koszul_transition.
ComplexMorphism dual_koszul_transition(const RingPtr& ring, const Sequence& seq, unsigned i, unsigned j);
/// rho_i : K^v(A; seq^i) -> A[0], the identity in degree 0.
ComplexMorphism dual_koszul_augmentation(const RingPtr& ring, const Sequence& seq, unsigned i);
/// The degree-0 inclusion A[0] -> K(A; seq^i).
ComplexMorphism koszul_coaugmentation(const RingPtr& ring, const Sequence& seq, unsigned i);

/// {H^p(K(A; seq^i))}_{i=1..N} with the transitions above.
CohomologyTower koszul_cohomology_prosystem(const RingPtr& ring, const Sequence& seq, int p, std::size_t depth);

struct WprVerdict {
  bool pass = true;
  std::vector<std::pair<int, ProZeroVerdict>> degrees;  // p = -n .. -1
};
WprVerdict weak_proregularity_check(const RingPtr& ring, const Sequence& seq, std::size_t depth,
                                    std::size_t window);

struct RadicalInvarianceVerdict {
  WprVerdict first, second;
  bool agree = false;
};
/// Throws std::invalid_argument when some generator of one sequence has no
/// power up to `exponent_bound` in the ideal of the other.
RadicalInvarianceVerdict radical_invariance_suite(const RingPtr& ring, const Sequence& first, const Sequence& second,
                                                  std::size_t depth, std::size_t window,
                                                  unsigned exponent_bound = 16);

struct IdempotenceDegree {
  int degree = 0;
  EquivalenceVerdict verdict;
};
struct IdempotenceVerdict {
  bool pass = true;
  std::vector<IdempotenceDegree> left;   // rho (x) id
  std::vector<IdempotenceDegree> right;  // id (x) rho
};
/// Checks that rho_i (x) id and id (x) rho_i : P_i (x) P_i -> P_i induce
/// equivalences of the cohomology ind-systems, P_i = K^v(A; seq^i).
IdempotenceVerdict copointed_idempotence_check(const RingPtr& ring, const Sequence& seq, std::size_t depth,
                                               std::size_t window);

}  // namespace wpr
