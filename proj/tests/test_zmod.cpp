#include "doctest.h"

#include "support.hpp"
#include "wpr/resolution.hpp"
#include "wpr/zmod.hpp"

#include <numeric>

using namespace wpr;
using namespace testing_support;

namespace {

ZModClass one(const ZSummand& s, unsigned mult = 1) {
  ZModClass d;
  d.add(s, mult);
  return d;
}

ZModClass q_mod_z() {
  ZModClass d;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) d.add(ZSummand::prufer(q));
  return d;
}

long order(const ZModClass& d) {
  long o = 1;
  for (const auto& e : elementary_divisors(d)) o *= e.get_si();
  return o;
}

// |{x in Z/m : n x = 0}|
long brute_hom(long n, long m) {
  long c = 0;
  for (long x = 0; x < m; ++x) c += (n * x) % m == 0;
  return c;
}

// |Z/m / n Z/m|
long brute_coker(long n, long m) {
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  long c = 0;
  for (long x = 0; x < m; ++x) {
    long y = (n * x) % m;
    if (!hit[static_cast<std::size_t>(y)]) hit[static_cast<std::size_t>(y)] = true, ++c;
  }
  return m / c;
}

long ipow(long p, unsigned k) {
  long r = 1;
  while (k--) r *= p;
  return r;
}

}  // namespace

TEST_CASE("closed forms match small examples") {
  CHECK(zmod_gamma(2, q_mod_z()) == one(ZSummand::prufer(2)));
  CHECK(zmod_ext(8, one(ZSummand::prufer(2))).is_zero());
  CHECK(zmod_hom(12, one(ZSummand::prufer(2))) == one(ZSummand::cyclic(2, 2)));
  CHECK(zmod_hom(12, q_mod_z()) == cyclic_class(12));
  CHECK(zmod_ext(12, one(ZSummand::integers())) == cyclic_class(12));
  CHECK(zmod_hom(5, one(ZSummand::integers())).is_zero());
  CHECK(zmod_ext(12, one(ZSummand::localized({2}))) == cyclic_class(3));
  CHECK(zmod_localize(one(ZSummand::prufer(2)), 2).is_zero());
  CHECK(zmod_localize(one(ZSummand::integers()), 3) == one(ZSummand::localized({3})));
  CHECK(zmod_localize(one(ZSummand::localized({2})), 3) == one(ZSummand::localized({2, 3})));
  CHECK_THROWS_AS(zmod_hom(0, q_mod_z()), std::invalid_argument);
  CHECK_THROWS_AS(ZSummand::cyclic(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(ZSummand::localized({}), std::invalid_argument);
  CHECK(q_mod_z().is_injective());
  CHECK_FALSE(one(ZSummand::integers()).is_injective());
  CHECK(one(ZSummand::cyclic(2, 3), 2).to_string() == "2*Z/2^3");
}

TEST_CASE("closed forms agree with brute force") {
  for (long n = 1; n <= 64; ++n) {
    // Z/p^k with p^k <= 64
    for (long p : {2L, 3L, 5L, 7L}) {
      for (unsigned k = 1; ipow(p, k) <= 64; ++k) {
        ZModClass c = one(ZSummand::cyclic(p, k));
        CHECK(order(zmod_hom(n, c)) == brute_hom(n, ipow(p, k)));
        CHECK(order(zmod_ext(n, c)) == brute_coker(n, ipow(p, k)));
      }
    }
    // Z(p^oo) truncated at Z/p^T; the count is already stable at T and T+1
    for (long p : {2L, 3L}) {
      const unsigned t = p == 2 ? 12 : 7;
      long h = brute_hom(n, ipow(p, t));
      REQUIRE(h == brute_hom(n, ipow(p, t - 1)));
      CHECK(order(zmod_hom(n, one(ZSummand::prufer(p)))) == h);
      // every class of Z/p^T / n dies in the colimit along multiplication by p
      const long big = ipow(p, t + 6);
      bool dies = true;
      for (long x = 0; x < ipow(p, t); ++x) {
        long y = (x * ipow(p, 6)) % big;
        long g = std::gcd(n, big);
        dies = dies && y % g == 0;
      }
      CHECK(dies);
      CHECK(zmod_ext(n, one(ZSummand::prufer(p))).is_zero());
    }
    // Z: oracle through free resolutions
    FpModule zn = zmod({n});
    FpModule z = FpModule::free(ZZ(), 1);
    CHECK(is_zero(ext_module(zn, z, 0).module) == zmod_hom(n, one(ZSummand::integers())).is_zero());
    std::vector<Integer> f = factors(ext_module(zn, z, 1).module);
    Integer ord = 1;
    for (const auto& x : f) ord *= x;
    CHECK(ord == order(zmod_ext(n, one(ZSummand::integers()))));
    // Z[1/S]: (Z/n)[1/S] has order n / |S-power torsion of Z/n|
    for (const std::vector<long>& s : {std::vector<long>{2}, std::vector<long>{3}, std::vector<long>{2, 5}}) {
      long prod = 1;
      for (long p : s) prod *= ipow(p, 7);
      long tors = 0;
      for (long x = 0; x < n; ++x) tors += (static_cast<__int128>(prod) * x) % n == 0;
      CHECK(order(zmod_ext(n, one(ZSummand::localized(s)))) == n / tors);
      CHECK(zmod_hom(n, one(ZSummand::localized(s))).is_zero());
    }
    CHECK(zmod_hom(n, one(ZSummand::rationals())).is_zero());
    CHECK(zmod_ext(n, one(ZSummand::rationals())).is_zero());
  }
}

TEST_CASE("weak stability") {
  StabilityVerdict v = weak_stability_check(2, 6, {q_mod_z()});
  CHECK(v.pass);
  CHECK(v.entries[0].torsion == one(ZSummand::prufer(2)));
  CHECK(weak_stability_check(2, 6, {one(ZSummand::rationals())}).entries[0].torsion.is_zero());
  ZModClass mixed = one(ZSummand::rationals());
  mixed.add(ZSummand::prufer(3));
  StabilityVerdict m = weak_stability_check(3, 6, {mixed});
  CHECK(m.pass);
  CHECK(m.entries[0].torsion == one(ZSummand::prufer(3)));
  CHECK_THROWS_AS(weak_stability_check(2, 3, {one(ZSummand::integers())}), std::invalid_argument);
  CHECK_THROWS_AS(weak_stability_check(4, 3, {q_mod_z()}), std::invalid_argument);
}

TEST_CASE("injective modules have no higher local cohomology") {
  Thm45Verdict v = thm45_injective_test(2, q_mod_z(), 6);
  CHECK(v.pass);
  CHECK(v.h0_limit == one(ZSummand::prufer(2)));
  CHECK(v.h1_limit.is_zero());
  for (unsigned i = 1; i <= 6; ++i) CHECK(v.h0_levels[i - 1] == one(ZSummand::cyclic(2, i)));
  Thm45Verdict q = thm45_injective_test(2, one(ZSummand::rationals()), 4);
  CHECK(q.pass);
  CHECK(q.h0_limit.is_zero());
  Thm45Verdict p = thm45_injective_test(2, one(ZSummand::prufer(2)), 4);
  CHECK(p.pass);
  CHECK(p.h0_limit == one(ZSummand::prufer(2)));
  CHECK_THROWS_AS(thm45_injective_test(2, one(ZSummand::cyclic(2, 1)), 3), std::invalid_argument);
}
