#include "doctest.h"

#include "wpr/module.hpp"

#include <random>

using namespace wpr;

namespace {

RingPtr ZZ() { return Ring::integers(); }

RingPtr qq(std::vector<std::string> vars, std::vector<std::string> quotient = {}) {
  auto ctx = std::make_shared<const PolyContext>(Field(), std::move(vars));
  std::vector<Polynomial> q;
  for (const auto& s : quotient) q.push_back(parse_polynomial(s, ctx));
  return Ring::polynomial(ctx, q);
}

FpModule zmod(std::vector<long> orders) {
  RMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = Elem(orders[i]);
  return FpModule(ZZ(), orders.size(), rel);
}

std::vector<Integer> factors(const FpModule& m) { return invariant_factors(m); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// |Hom(M, N)| by enumerating generator images in N = Z/n_1 + ... + Z/n_k.
long brute_hom_count(const IntMatrix& rel_m, const std::vector<long>& n) {
  const std::size_t g = rel_m.rows();
  long size_n = 1;
  for (long x : n) size_n *= x;
  long total = 1;
  for (std::size_t i = 0; i < g; ++i) total *= size_n;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    // decode images x_j in N
    std::vector<std::vector<long>> x(g, std::vector<long>(n.size()));
    long c = code;
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < n.size(); ++k) {
        x[j][k] = c % n[k];
        c /= n[k];
      }
    bool ok = true;
    for (std::size_t l = 0; l < rel_m.cols() && ok; ++l)
      for (std::size_t k = 0; k < n.size() && ok; ++k) {
        long s = 0;
        for (std::size_t j = 0; j < g; ++j) s += rel_m(j, l).get_si() * x[j][k];
        ok = ((s % n[k]) + n[k]) % n[k] == 0;
      }
    if (ok) ++count;
  }
  return count;
}

long order(const FpModule& m) {
  long o = 1;
  for (const auto& d : factors(m)) {
    REQUIRE(d != 0);
    o *= d.get_si();
  }
  return o;
}

}  // namespace

TEST_CASE("zero tests") {
  CHECK(is_zero(FpModule(ZZ(), 1, to_rmatrix(IntMatrix::from_rows({{1}})))));
  CHECK_FALSE(is_zero(zmod({6})));
  auto a = qq({"x", "y"});
  RMatrix rel(2, 2);
  rel(0, 0) = a->parse("x");
  rel(1, 0) = a->parse("1");
  rel(0, 1) = a->parse("1");
  CHECK(is_zero(FpModule(a, 2, rel)));
  CHECK_FALSE(is_zero(FpModule::free(a, 1)));
}

TEST_CASE("integer minimization is canonical") {
  FpModule m(ZZ(), 2, to_rmatrix(IntMatrix::from_rows({{2, 4}, {6, 8}})));
  CHECK(factors(m) == ints({2, 4}));
  CHECK(factors(zmod({4, 6})) == ints({2, 12}));
  CHECK(factors(FpModule(ZZ(), 3, to_rmatrix(IntMatrix::from_rows({{1}, {0}, {0}})))) == ints({0, 0}));
  Minimized mm = minimize(zmod({4, 6}));
  // to_new * to_old is the identity on the new generators
  CHECK(multiply(mm.to_new, mm.to_old) == identity(mm.module.generators()));
}

TEST_CASE("kernel, image and cokernel") {
  FpModule z = FpModule::free(ZZ(), 1);
  Morphism two = make_morphism(z, z, RMatrix(1, 1, Elem(2)));
  CHECK(is_zero(kernel(two).module));
  CHECK(factors(cokernel(two).module) == ints({2}));
  Morphism id = identity_morphism(zmod({12}));
  CHECK(is_zero(kernel(id).module));
  CHECK(is_zero(cokernel(id).module));

  auto a = qq({"x"});
  FpModule m = quotient_module(a, {a->parse("x^2")});
  Morphism x = make_morphism(m, m, RMatrix(1, 1, a->parse("x")));
  Subquotient k = kernel(x);
  REQUIRE(k.module.generators() == 1);
  CHECK(submodule_equal(m, k.representatives, RMatrix(1, 1, a->parse("x"))));
  FpModule c = cokernel(x).module;
  CHECK(c.generators() == 1);
  CHECK(c.is_zero_element({a->parse("x")}));
  CHECK_FALSE(c.is_zero_element({a->parse("1")}));

  CHECK_THROWS_AS(make_morphism(zmod({2}), z, RMatrix(1, 1, Elem(1))), std::invalid_argument);
}

TEST_CASE("tensor, hom and sums") {
  CHECK(factors(tensor_module(zmod({4}), zmod({6}))) == ints({2}));
  CHECK(factors(hom_module(zmod({4}), zmod({6})).module) == ints({2}));
  CHECK(factors(tensor_module(FpModule::free(ZZ(), 1), zmod({5, 10}))) == ints({5, 10}));
  CHECK(factors(direct_sum({zmod({2}), FpModule::free(ZZ(), 1), zmod({3})})) == ints({6, 0}));
  CHECK(factors(hom_module(FpModule::free(ZZ(), 2), zmod({3})).module) == ints({3, 3}));
}

TEST_CASE("tensor-hom adjunction on finite abelian groups") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> small(2, 6);
  for (int trial = 0; trial < 12; ++trial) {
    FpModule m = zmod({small(rng)});
    FpModule n = trial % 2 ? zmod({small(rng)}) : zmod({2, small(rng)});
    FpModule p = zmod({small(rng)});
    long lhs = order(hom_module(tensor_module(m, n), p).module);
    long rhs = order(hom_module(m, hom_module(n, p).module).module);
    CHECK(lhs == rhs);
    // brute-force oracle on the left side
    Minimized t = minimize(tensor_module(m, n));
    std::vector<long> pn;
    for (const auto& d : factors(p)) pn.push_back(d.get_si());
    CHECK(lhs == brute_hom_count(to_intmatrix(t.module.relations()), pn));
  }
}

TEST_CASE("ideal powers") {
  auto a = qq({"x", "y"});
  auto p2 = ideal_power(a, {a->parse("x"), a->parse("y")}, 2);
  REQUIRE(p2.size() == 3);
  CHECK(a->format(p2[0]) == "x^2");
  CHECK(a->format(p2[1]) == "x*y");
  CHECK(a->format(p2[2]) == "y^2");
  auto s2 = power_sequence(a, {a->parse("x"), a->parse("y")}, 2);
  CHECK(a->format(s2[1]) == "y^2");

  auto z = ZZ();
  CHECK(ideal_power(z, {Elem(4), Elem(6)}, 2).size() == 3);
  CHECK(ideal_contains(z, ideal_power(z, {Elem(4), Elem(6)}, 2), Elem(4)));
  CHECK_FALSE(ideal_contains(z, ideal_power(z, {Elem(4), Elem(6)}, 2), Elem(2)));
  CHECK_THROWS_AS(ideal_power(z, {Elem(2)}, 0), std::invalid_argument);

  // cofinality: a^{n i} is contained in the ideal of i-th powers
  std::vector<Elem> gens = {a->parse("x+y"), a->parse("x*y"), a->parse("y^2")};
  for (unsigned i = 1; i <= 3; ++i) {
    auto seq = power_sequence(a, gens, i);
    for (const auto& f : ideal_power(a, gens, 3 * i)) CHECK(ideal_contains(a, seq, f));
    for (unsigned j = 1; j <= 2; ++j)
      for (const auto& f : ideal_power(a, gens, i + j)) {
        // a^{i+j} is generated by products of a^i and a^j generators
        std::vector<Elem> prod;
        for (const auto& u : ideal_power(a, gens, i))
          for (const auto& v : ideal_power(a, gens, j)) prod.push_back(a->normalize(u * v));
        CHECK(ideal_contains(a, prod, f));
      }
  }
}

TEST_CASE("quotients and annihilators") {
  auto z = ZZ();
  CHECK(factors(quotient_module(z, ideal_power(z, {Elem(2)}, 3))) == ints({8}));
  Subquotient ann = annihilator(zmod({12}), {Elem(4)});
  CHECK(factors(ann.module) == ints({4}));
  CHECK(submodule_equal(zmod({12}), ann.representatives, RMatrix(1, 1, Elem(3))));
  auto a = qq({"x"});
  CHECK(is_zero(annihilator(FpModule::free(a, 1), {a->parse("x")}).module));
  CHECK(is_zero(annihilator(FpModule::zero(z), {Elem(2)}).module));

  auto b = qq({"x", "y"});
  FpModule q = quotient_module(b, ideal_power(b, {b->parse("x"), b->parse("y")}, 2));
  Minimized mq = minimize(q);
  CHECK(mq.module.generators() == 1);
}

TEST_CASE("image equals kernel of the projection to the cokernel") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int trial = 0; trial < 15; ++trial) {
    FpModule src = FpModule::free(ZZ(), 2);
    FpModule tgt = zmod({2 + trial % 5, 0});
    RMatrix f(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f(i, j) = Elem(e(rng));
    Morphism phi = make_morphism(src, tgt, f);
    Subquotient im = image(phi);
    Minimized co = cokernel(phi);
    Subquotient ker_proj = kernel(Morphism{tgt, co.module, co.to_new});
    CHECK(submodule_equal(tgt, im.representatives, ker_proj.representatives));
  }
}
