#include "doctest.h"

#include "wpr/groebner.hpp"

#include <algorithm>
#include <random>

using namespace wpr;

namespace {

PolyContextPtr qq(std::vector<std::string> vars, MonomialOrder o = MonomialOrder::Grevlex) {
  return std::make_shared<const PolyContext>(Field(), std::move(vars), o);
}

Polynomial P(const std::string& s, const PolyContextPtr& ctx) { return parse_polynomial(s, ctx); }

}  // namespace

TEST_CASE("parse and print") {
  auto ctx = qq({"x", "y", "z"});
  Polynomial f = P("3*x^2*y - 1/2*z + 7", ctx);
  CHECK(f.to_string() == "3*x^2*y - 1/2*z + 7");
  CHECK(P("7 - 1/2*z + y*x^2*3", ctx) == f);
  CHECK(P("(x+y)^2", ctx).to_string() == "x^2 + 2*x*y + y^2");
  CHECK(P("2/4*x", ctx).to_string() == "1/2*x");
  CHECK(P("x - x", ctx).is_zero());
  CHECK_THROWS_AS(P("x + w", ctx), std::invalid_argument);
  CHECK_THROWS_AS(P("x / y", ctx), std::invalid_argument);

  auto f5 = std::make_shared<const PolyContext>(Field::prime(5), std::vector<std::string>{"x"});
  CHECK(P("7*x - 1", f5).to_string() == "2*x + 4");
}

TEST_CASE("term orders") {
  auto g = qq({"x", "y", "z"});
  // grevlex: x*z^2 vs y^3 same degree; y^3 > x*z^2 since z-exponent smaller in y^3
  CHECK(P("x*z^2 + y^3", g).to_string() == "y^3 + x*z^2");
  auto l = qq({"x", "y", "z"}, MonomialOrder::Lex);
  CHECK(P("y^5 + x", l).to_string() == "x + y^5");
  auto gl = qq({"x", "y", "z"}, MonomialOrder::GradedLex);
  CHECK(P("y^5 + x*y", gl).to_string() == "y^5 + x*y");
  CHECK(P("x*z^2 + y^3", gl).to_string() == "x*z^2 + y^3");
}

TEST_CASE("groebner basis examples") {
  auto ctx = qq({"x", "y"});
  auto gb = groebner_basis({P("x", ctx)});
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators[0] == P("x", ctx));

  gb = groebner_basis({P("x^2", ctx), P("x*y", ctx)});
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == P("x^2", ctx));
  CHECK(gb.generators[1] == P("x*y", ctx));

  gb = groebner_basis({P("x+y", ctx), P("x-y", ctx)});
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == P("x", ctx));
  CHECK(gb.generators[1] == P("y", ctx));

  CHECK_THROWS_AS(groebner_basis({}), std::invalid_argument);
  auto other = qq({"u", "v"});
  CHECK_THROWS_AS(groebner_basis({P("x", ctx), P("u", other)}), std::invalid_argument);
}

TEST_CASE("normal form examples") {
  auto ctx = qq({"x", "y"});
  auto gx = groebner_basis({P("x", ctx)});
  CHECK(normal_form(P("x^2", ctx), gx).is_zero());
  auto g = groebner_basis({P("x^2", ctx), P("x*y", ctx)});
  CHECK(normal_form(P("x^2*y + y", ctx), g) == P("y", ctx));
  CHECK(normal_form(P("y^3", ctx), g) == P("y^3", ctx));
  auto other = qq({"u"});
  CHECK_THROWS_AS(normal_form(P("u", other), g), std::invalid_argument);
}

TEST_CASE("cyclic-3 basis and lex elimination") {
  auto ctx = qq({"x", "y", "z"});
  std::vector<Polynomial> cyc = {P("x+y+z", ctx), P("x*y+y*z+z*x", ctx), P("x*y*z-1", ctx)};
  for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::GradedLex}) {
    auto gb = groebner_basis(cyc, order);
    ModuleGroebnerBasis check(gb.ctx, [&] {
      std::vector<ModuleVector> v;
      for (const auto& p : gb.generators) v.push_back(to_module_vector({p}));
      return v;
    }());
    CHECK(check.verify());
    for (const auto& f : cyc) CHECK(normal_form(f, gb).is_zero());
  }
  auto lex = groebner_basis(cyc, MonomialOrder::Lex);
  // the lex basis contains a univariate polynomial in z: z^3 - 1
  bool found = false;
  for (const auto& p : lex.generators) found |= p.to_string() == "z^3 - 1";
  CHECK(found);
}

TEST_CASE("normal forms are independent of reduction order") {
  // Confluence: reducing with randomly permuted divisor choices yields the
  // same remainder as the canonical reducer.
  auto ctx = qq({"x", "y", "z"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  auto random_poly = [&](int terms) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) {
      Monomial m(std::vector<std::uint32_t>{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                                            static_cast<std::uint32_t>(e(rng))});
      t.push_back(Term{Rational(c(rng)), m});
    }
    return Polynomial(ctx, t);
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens = {random_poly(3), random_poly(3), random_poly(2)};
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (all_zero) continue;
    auto gb = groebner_basis(gens);
    for (int probe = 0; probe < 5; ++probe) {
      Polynomial f = random_poly(5);
      Polynomial expected = normal_form(f, gb);
      // naive reducer with shuffled divisor order
      std::vector<Polynomial> divisors = gb.generators;
      std::shuffle(divisors.begin(), divisors.end(), rng);
      Polynomial rem, cur = f;
      while (!cur.is_zero()) {
        const Term& lt = cur.leading_term();
        bool reduced = false;
        for (const auto& d : divisors) {
          if (d.leading_term().mono.divides(lt.mono)) {
            cur = cur - d.times_term(lt.coeff / d.leading_term().coeff, quotient(lt.mono, d.leading_term().mono));
            reduced = true;
            break;
          }
        }
        if (!reduced) {
          Polynomial head = Polynomial::monomial(ctx, lt.coeff, lt.mono);
          rem = rem + head;
          cur = cur - head;
        }
      }
      CHECK(rem == expected);
      CHECK(normal_form(expected, gb) == expected);
    }
  }
}
