#include "doctest.h"

#include "wpr/complex.hpp"

#include <map>
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

RMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return to_rmatrix(m);
}

std::vector<Integer> factors(const FpModule& m) { return invariant_factors(m); }

// Two-term complex [A --a--> A] in degrees -1, 0.
Complex two_term(const RingPtr& ring, const Elem& a) {
  return Complex(ring, -1, {FpModule::free(ring, 1), FpModule::free(ring, 1)}, {RMatrix(1, 1, a)});
}

// A uniformly random well-defined map M -> N built from Hom(M, N).
RMatrix random_map(std::mt19937& rng, const FpModule& m, const FpModule& n) {
  Subquotient h = hom_module(m, n);
  std::uniform_int_distribution<long> c(-3, 3);
  RVector v(h.representatives.rows());
  for (std::size_t k = 0; k < h.representatives.cols(); ++k) {
    Elem coeff(c(rng));
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = v[r] + coeff * h.representatives(r, k);
  }
  RMatrix out(n.generators(), m.generators());
  for (std::size_t j = 0; j < m.generators(); ++j)
    for (std::size_t i = 0; i < n.generators(); ++i) out(i, j) = v[j * n.generators() + i];
  return out;
}

FpModule random_finite(std::mt19937& rng) {
  std::uniform_int_distribution<long> o(2, 12), k(1, 2);
  std::vector<long> orders;
  for (long i = 0, n = k(rng); i < n; ++i) orders.push_back(o(rng));
  return zmod(orders);
}

// Random three-term complex of finite abelian groups in degrees 0..2.
Complex random_finite_complex(std::mt19937& rng) {
  FpModule c0 = random_finite(rng), c1 = random_finite(rng), c2 = random_finite(rng);
  RMatrix d0 = random_map(rng, c0, c1);
  Minimized q = cokernel(Morphism{c0, c1, d0});
  RMatrix d1 = mul(ZZ(), random_map(rng, q.module, c2), q.to_new);
  return Complex(ZZ(), 0, {c0, c1, c2}, {d0, d1});
}

Rational order(const FpModule& m) {
  Rational o = 1;
  for (const auto& d : factors(m)) {
    REQUIRE(d != 0);
    o *= d;
  }
  return o;
}

// im(a) = ker(b) inside the middle module, and b a = 0.
bool exact_at(const Morphism& a, const Morphism& b) {
  if (!is_zero(compose(b, a))) return false;
  Subquotient k = kernel(b);
  return submodule_contains(a.target, a.matrix, k.representatives);
}

}  // namespace

TEST_CASE("cohomology of small complexes") {
  Complex k2 = two_term(ZZ(), Elem(2));
  CHECK(factors(cohomology(k2, 0).module) == std::vector<Integer>{2});
  CHECK(is_zero(cohomology(k2, -1).module));
  CHECK(is_zero(cohomology(k2, 3).module));

  Complex single = Complex::concentrated(zmod({5}));
  CHECK(factors(cohomology(single, 0).module) == std::vector<Integer>{5});

  // 0 -> Z -> Z^2 -> Z -> 0 with (1,1)^T then (1,-1): exact everywhere.
  Complex exact(ZZ(), 0, {FpModule::free(ZZ(), 1), FpModule::free(ZZ(), 2), FpModule::free(ZZ(), 1)},
                {ints({{1}, {1}}), ints({{1, -1}})});
  for (int q = -1; q <= 3; ++q) CHECK(is_zero(cohomology(exact, q).module));

  // Replacing the first map by (1,-1)^T doubled: H^1 = Z/2.
  Complex h1(ZZ(), 0, {FpModule::free(ZZ(), 1), FpModule::free(ZZ(), 2), FpModule::free(ZZ(), 1)},
             {ints({{2}, {2}}), ints({{1, -1}})});
  CHECK(factors(cohomology(h1, 1).module) == std::vector<Integer>{2});
}

TEST_CASE("d o d must vanish") {
  FpModule z = FpModule::free(ZZ(), 1);
  try {
    Complex bad(ZZ(), 3, {z, z, z}, {ints({{1}}), ints({{1}})});
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("degree 3") != std::string::npos);
  }
  CHECK_THROWS_AS(Complex(ZZ(), 0, {zmod({2}), z}, {ints({{1}})}), std::invalid_argument);
}

TEST_CASE("tensor products") {
  Complex k = tensor(two_term(ZZ(), Elem(2)), two_term(ZZ(), Elem(3)));
  CHECK(k.lo() == -2);
  for (int q = -2; q <= 0; ++q) CHECK(is_zero(cohomology(k, q).module));

  Complex unit = Complex::concentrated(FpModule::free(ZZ(), 1));
  Complex c = two_term(ZZ(), Elem(6));
  Complex cu = tensor(c, unit);
  CHECK(cu.lo() == c.lo());
  for (int q = -1; q <= 0; ++q) CHECK(factors(cohomology(cu, q).module) == factors(cohomology(c, q).module));

  auto a = qq({"x", "y"});
  Complex kxy = tensor(two_term(a, a->parse("x")), two_term(a, a->parse("y")));
  CHECK(kxy.at(-2).generators() == 1);
  CHECK(kxy.at(-1).generators() == 2);
  CHECK(kxy.at(0).generators() == 1);
  CHECK(is_zero(cohomology(kxy, -1).module));
  CHECK(is_zero(cohomology(kxy, -2).module));
}

TEST_CASE("hom complexes") {
  Complex z0 = Complex::concentrated(FpModule::free(ZZ(), 1));
  HomComplex h = hom_complex(two_term(ZZ(), Elem(2)), z0);
  CHECK_FALSE(h.underived);
  CHECK(h.complex.lo() == 0);
  CHECK(h.complex.hi() == 1);
  // d f = -(-1)^0 f o d_K: the dual differential is multiplication by -2.
  CHECK(h.complex.d(0)(0, 0) == Elem(-2));
  CHECK(factors(cohomology(h.complex, 1).module) == std::vector<Integer>{2});

  Complex d = two_term(ZZ(), Elem(4));
  Complex hd = hom_complex(z0, d).complex;
  for (int q = -1; q <= 0; ++q) CHECK(factors(cohomology(hd, q).module) == factors(cohomology(d, q).module));

  auto a = qq({"x", "y"});
  Complex kxy = tensor(two_term(a, a->parse("x")), two_term(a, a->parse("y")));
  Complex dual = hom_complex(kxy, Complex::concentrated(FpModule::free(a, 1))).complex;
  CHECK(dual.lo() == 0);
  CHECK(dual.at(0).generators() == 1);
  CHECK(dual.at(1).generators() == 2);
  CHECK(dual.at(2).generators() == 1);

  // Non-free source: Hom(Z/2[0], Z/4[0]) = Z/2, flagged underived.
  HomComplex u = hom_complex(Complex::concentrated(zmod({2})), Complex::concentrated(zmod({4})));
  CHECK(u.underived);
  CHECK(factors(cohomology(u.complex, 0).module) == std::vector<Integer>{2});
}

TEST_CASE("shift, cone and quasi-isomorphisms") {
  Complex c = two_term(ZZ(), Elem(6));
  Complex s = shift(c, 1);
  CHECK(s.lo() == -2);
  CHECK(s.d(-2)(0, 0) == Elem(-6));
  CHECK(factors(cohomology(s, -1).module) == std::vector<Integer>{6});

  CHECK(is_quasi_iso(identity_morphism(c)).quasi_isomorphism);
  Complex zero = Complex::concentrated(FpModule::zero(ZZ()));
  ComplexMorphism from_zero(zero, c, 0, {});
  Complex cz = cone(from_zero);
  for (int q = -1; q <= 0; ++q) CHECK(factors(cohomology(cz, q).module) == factors(cohomology(c, q).module));

  Complex z0 = Complex::concentrated(FpModule::free(ZZ(), 1));
  ComplexMorphism two(z0, z0, 0, {RMatrix(1, 1, Elem(2))});
  CHECK(factors(cohomology(cone(two), 0).module) == std::vector<Integer>{2});
  CHECK_FALSE(is_quasi_iso(ComplexMorphism(z0, z0, 0, {})).quasi_isomorphism);

  auto a = qq({"x", "y"});
  Complex kxy = tensor(two_term(a, a->parse("x")), two_term(a, a->parse("y")));
  Complex target = Complex::concentrated(quotient_module(a, {a->parse("x"), a->parse("y")}));
  ComplexMorphism aug(kxy, target, 0, {identity(1)});
  CHECK(is_quasi_iso(aug).quasi_isomorphism);

  CHECK_THROWS_AS(ComplexMorphism(c, z0, 0, {RMatrix(1, 1, Elem(1))}), std::invalid_argument);
}

TEST_CASE("Euler characteristic of finite complexes") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    Complex c = random_finite_complex(rng);
    Rational lhs = 1, rhs = 1;
    for (int q = 0; q <= 2; ++q) {
      Rational h = order(cohomology(c, q).module), m = order(c.at(q));
      if (q % 2 == 0) {
        lhs *= h;
        rhs *= m;
      } else {
        lhs /= h;
        rhs /= m;
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cone long exact sequence") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    Complex c = random_finite_complex(rng);
    Complex d = random_finite_complex(rng);
    // a chain map c -> d concentrated in degree 2 (no constraints on top)
    FpModule c2 = c.at(2), d2 = d.at(2);
    Minimized q = cokernel(Morphism{c.at(1), c2, c.d(1)});
    RMatrix f2 = mul(ZZ(), random_map(rng, q.module, d2), q.to_new);
    ComplexMorphism f(c, d, 2, {f2});
    Complex k = cone(f);
    std::vector<RMatrix> in_maps, out_maps;
    for (int t = k.lo(); t <= k.hi(); ++t) {
      const std::size_t cs = c.at(t + 1).generators(), ds = d.at(t).generators();
      RMatrix inj(cs + ds, ds), proj(cs, cs + ds);
      for (std::size_t i = 0; i < ds; ++i) inj(cs + i, i) = Elem(1);
      for (std::size_t i = 0; i < cs; ++i) proj(i, i) = Elem(1);
      in_maps.push_back(inj);
      out_maps.push_back(proj);
    }
    ComplexMorphism into(d, k, k.lo(), in_maps);
    ComplexMorphism onto(k, shift(c, 1), k.lo(), out_maps);
    for (int t = -1; t <= 2; ++t) {
      Morphism hf = induced_map(f, t);
      Morphism hi = induced_map(into, t);
      Morphism hp = induced_map(onto, t);
      Morphism hf1 = induced_map(f, t + 1);
      // the identification H^t(C[1]) = H^{t+1}(C) uses the same generators
      Morphism hp_as_next{hp.source, hf1.source, hp.matrix};
      CHECK(exact_at(hf, hi));
      CHECK(exact_at(hi, hp));
      CHECK(exact_at(hp_as_next, hf1));
    }
  }
}

TEST_CASE("tensor associativity up to rebracketing") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> e(-3, 3), r(1, 2);
  auto random_free = [&]() {
    std::size_t a = r(rng), b = r(rng);
    RMatrix d(b, a);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) d(i, j) = Elem(e(rng));
    return Complex(ZZ(), -1, {FpModule::free(ZZ(), a), FpModule::free(ZZ(), b)}, {d});
  };
  for (int trial = 0; trial < 10; ++trial) {
    Complex c = random_free(), d = random_free(), f = random_free();
    Complex left = tensor(tensor(c, d), f), right = tensor(c, tensor(d, f));
    REQUIRE(left.lo() == right.lo());
    auto g = [](const Complex& x, int q) { return x.at(q).generators(); };
    std::vector<RMatrix> maps;
    for (int k = left.lo(); k <= left.hi(); ++k) {
      RMatrix m(right.at(k).generators(), left.at(k).generators());
      // left: blocks by (i+j) then i; index (a*h + b)*e + c inside (c(x)d)^{i+j} (x) f^l
      std::size_t loff = 0;
      for (int ij = c.lo() + d.lo(); ij <= c.hi() + d.hi(); ++ij) {
        int l = k - ij;
        if (l < f.lo() || l > f.hi()) continue;
        std::size_t cd_off = 0;
        for (int i = c.lo(); i <= c.hi(); ++i) {
          int j = ij - i;
          if (j < d.lo() || j > d.hi()) continue;
          // right: block i, index a * |(d(x)f)^{k-i}| + offset_j + b*e + c
          std::size_t roff = 0;
          for (int i2 = c.lo(); i2 < i; ++i2) roff += g(c, i2) * g(tensor(d, f), k - i2);
          std::size_t df_size = g(tensor(d, f), k - i), df_off = 0;
          for (int j2 = d.lo(); j2 < j; ++j2)
            if (k - i - j2 >= f.lo() && k - i - j2 <= f.hi()) df_off += g(d, j2) * g(f, k - i - j2);
          for (std::size_t a = 0; a < g(c, i); ++a)
            for (std::size_t b = 0; b < g(d, j); ++b)
              for (std::size_t e2 = 0; e2 < g(f, l); ++e2) {
                std::size_t li = loff + (cd_off + a * g(d, j) + b) * g(f, l) + e2;
                std::size_t ri = roff + a * df_size + df_off + b * g(f, l) + e2;
                m(ri, li) = Elem(1);
              }
          cd_off += g(c, i) * g(d, j);
        }
        loff += cd_off * g(f, l);
      }
      maps.push_back(m);
    }
    ComplexMorphism rebracket(left, right, left.lo(), maps);
    for (int k = left.lo(); k <= left.hi(); ++k) {
      Morphism mk{left.at(k), right.at(k), rebracket.at(k)};
      CHECK(is_zero(kernel(mk).module));
      CHECK(is_zero(cokernel(mk).module));
    }
  }
}
