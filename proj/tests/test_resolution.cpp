#include "doctest.h"

#include "wpr/resolution.hpp"

#include <random>

using namespace wpr;

namespace {

RingPtr ZZ() { return Ring::integers(); }

RingPtr qq(std::vector<std::string> vars) {
  return Ring::polynomial(std::make_shared<const PolyContext>(Field(), std::move(vars)));
}

FpModule zmod(std::vector<long> orders) {
  RMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = Elem(orders[i]);
  return FpModule(ZZ(), orders.size(), rel);
}

std::vector<Integer> factors(const FpModule& m) { return invariant_factors(m); }

// F (+) [A --1--> A] in degrees -2, -1: still a resolution of the same module.
Complex pad(const Complex& f) {
  const RingPtr& ring = f.ring();
  const int lo = std::min(f.lo(), -2);
  std::vector<FpModule> mods;
  std::vector<RMatrix> diffs;
  auto extra = [](int q) -> std::size_t { return (q == -2 || q == -1) ? 1 : 0; };
  for (int q = lo; q <= 0; ++q) mods.push_back(FpModule::free(ring, f.at(q).generators() + extra(q)));
  for (int q = lo; q < 0; ++q) {
    RMatrix d = block_diagonal(f.d(q), RMatrix(extra(q + 1), extra(q)));
    if (q == -2) d(f.at(q + 1).generators(), f.at(q).generators()) = Elem(1);
    if (d.rows() != mods[static_cast<std::size_t>(q + 1 - lo)].generators() ||
        d.cols() != mods[static_cast<std::size_t>(q - lo)].generators())
      d = RMatrix(mods[static_cast<std::size_t>(q + 1 - lo)].generators(), mods[static_cast<std::size_t>(q - lo)].generators());
    diffs.push_back(d);
  }
  return Complex(ring, lo, std::move(mods), std::move(diffs));
}

bool bijective(const Morphism& m) { return is_zero(kernel(m).module) && is_zero(cokernel(m).module); }

void check_resolution(const FreeResolution& r) {
  const Complex& f = r.complex;
  for (int q = f.lo(); q < 0; ++q) CHECK(is_zero(cohomology(f, q).module));
  FpModule h0 = cokernel(Morphism{f.at(-1), f.at(0), f.d(-1)}).module;
  Minimized c = cokernel(Morphism{f.at(-1), f.at(0), f.d(-1)});
  Morphism aug{c.module, r.module, mul(f.ring(), r.augmentation, c.to_old)};
  REQUIRE(is_well_defined(aug));
  CHECK(bijective(aug));
  (void)h0;
}

}  // namespace

TEST_CASE("syzygies") {
  auto a = qq({"x", "y"});
  RMatrix xy(1, 2);
  xy(0, 0) = a->parse("x");
  xy(0, 1) = a->parse("y");
  RMatrix s = Span(a, 1, xy, true).syzygies();
  REQUIRE(s.cols() == 1);
  CHECK(((a->format(s(0, 0)) == "y" && a->format(s(1, 0)) == "-x") ||
         (a->format(s(0, 0)) == "-y" && a->format(s(1, 0)) == "x")));
  CHECK(Span(a, 1, RMatrix(1, 1, Elem(1)), true).syzygies().cols() == 0);
  RMatrix two_three(1, 2);
  two_three(0, 0) = Elem(2);
  two_three(0, 1) = Elem(3);
  RMatrix z = Span(ZZ(), 1, two_three, true).syzygies();
  REQUIRE(z.cols() == 1);
  CHECK(((z(0, 0) == Elem(3) && z(1, 0) == Elem(-2)) || (z(0, 0) == Elem(-3) && z(1, 0) == Elem(2))));
}

TEST_CASE("free resolutions") {
  FreeResolution r6 = free_resolution(zmod({6}));
  CHECK(r6.length == 1);
  check_resolution(r6);

  auto a = qq({"x", "y"});
  FreeResolution k = free_resolution(quotient_module(a, {a->parse("x"), a->parse("y")}));
  CHECK(k.length == 2);
  CHECK(k.complex.at(0).generators() == 1);
  CHECK(k.complex.at(-1).generators() == 2);
  CHECK(k.complex.at(-2).generators() == 1);
  check_resolution(k);

  CHECK(free_resolution(FpModule::free(a, 3)).length == 0);

  auto q = Ring::polynomial(std::make_shared<const PolyContext>(Field(), std::vector<std::string>{"x"}),
                            {parse_polynomial("x^2", std::make_shared<const PolyContext>(Field(), std::vector<std::string>{"x"}))});
  CHECK_THROWS_AS(free_resolution(quotient_module(q, {q->parse("x")}), 5), BudgetExceeded);
}

TEST_CASE("resolutions of monomial quotients stay within the syzygy bound") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> nv(2, 3), ng(1, 4), ex(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = nv(rng);
    std::vector<std::string> vars = {"x", "y", "z"};
    vars.resize(static_cast<std::size_t>(n));
    auto ring = qq(vars);
    std::vector<Elem> gens;
    for (int g = 0, count = ng(rng); g < count; ++g) {
      std::string mono = "1";
      for (int v = 0; v < n; ++v) mono += "*" + vars[static_cast<std::size_t>(v)] + "^" + std::to_string(ex(rng));
      gens.push_back(ring->parse(mono));
    }
    FreeResolution r = free_resolution(quotient_module(ring, gens));
    CHECK(r.length <= static_cast<std::size_t>(n));
    check_resolution(r);
  }
}

TEST_CASE("ext modules") {
  FpModule z = FpModule::free(ZZ(), 1);
  for (long i = 1; i <= 4; ++i) {
    long n = 1L << i;
    CHECK(factors(ext_module(zmod({n}), z, 1).module) == std::vector<Integer>{n});
    CHECK(is_zero(ext_module(zmod({n}), z, 0).module));
  }
  CHECK(factors(ext_module(z, zmod({3, 9}), 0).module) == std::vector<Integer>{3, 9});

  auto a = qq({"x", "y"});
  FpModule k = quotient_module(a, {a->parse("x"), a->parse("y")});
  Subquotient e2 = ext_module(k, FpModule::free(a, 1), 2);
  Minimized m = minimize(e2.module);
  REQUIRE(m.module.generators() == 1);
  CHECK(m.module.is_zero_element({a->parse("x")}));
  CHECK(m.module.is_zero_element({a->parse("y")}));
  CHECK_FALSE(m.module.is_zero_element({a->parse("1")}));
  CHECK(is_zero(ext_module(k, FpModule::free(a, 1), 1).module));
}

TEST_CASE("ext does not depend on the resolution") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> e(-4, 4), o(2, 9);
  for (int trial = 0; trial < 10; ++trial) {
    // integers: compare invariant factors through a padded resolution
    RMatrix rel(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) rel(i, j) = Elem(e(rng));
    FpModule m(ZZ(), 2, rel);
    FpModule n = zmod({o(rng)});
    FreeResolution r = free_resolution(m);
    Complex padded = pad(r.complex);
    Complex n0 = Complex::concentrated(n);
    for (int p = 0; p <= 2; ++p) {
      auto lhs = factors(cohomology(hom_complex(r.complex, n0).complex, p).module);
      auto rhs = factors(cohomology(hom_complex(padded, n0).complex, p).module);
      CHECK(lhs == rhs);
    }
  }
  auto a = qq({"x", "y"});
  std::vector<std::vector<std::string>> ideals = {{"x^2", "x*y"}, {"x^2", "y^3"}, {"x*y", "y^2", "x^3"}, {"x+y", "x^2"}, {"x^2*y"}};
  for (const auto& ideal : ideals) {
    std::vector<Elem> gens;
    for (const auto& s : ideal) gens.push_back(a->parse(s));
    FpModule m = quotient_module(a, gens);
    FreeResolution r = free_resolution(m);
    Complex padded = pad(r.complex);
    // comparison maps in both directions lifting the identity of F_0
    ComplexMorphism there = lift_chain_map(r.complex, padded, identity(r.complex.at(0).generators()));
    ComplexMorphism back = lift_chain_map(padded, r.complex, identity(r.complex.at(0).generators()));
    Complex n0 = Complex::concentrated(quotient_module(a, {a->parse("x")}));
    ComplexMorphism h_there = hom_precompose(there, n0);
    ComplexMorphism h_back = hom_precompose(back, n0);
    for (int p = 0; p <= 2; ++p) {
      CHECK(bijective(induced_map(h_there, p)));
      CHECK(bijective(induced_map(h_back, p)));
    }
  }
}
