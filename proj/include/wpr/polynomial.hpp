#pragma once

#include "wpr/field.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wpr {

enum class MonomialOrder { Grevlex, Lex, GradedLex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(std::string_view name);

/// Exponent vector with cached total degree.
struct Monomial {
  std::vector<std::uint32_t> exps;
  std::uint64_t degree = 0;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e);

  bool divides(const Monomial& other) const;
  bool is_one() const { return degree == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b, assuming b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Coefficient field, variable names and term order of a polynomial ring.
class PolyContext {
 public:
  PolyContext(Field field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::Grevlex);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  MonomialOrder order() const { return order_; }

  /// Three-way comparison in the ring's term order.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Index of a variable name, or -1.
  int variable_index(std::string_view name) const;

  friend bool operator==(const PolyContext& a, const PolyContext& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial, terms sorted strictly descending in the ring's order,
/// no zero coefficients. The default value is the zero polynomial and carries
/// no context; arithmetic adopts the context of the other operand.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(PolyContextPtr ctx, std::vector<Term> terms);

  static Polynomial constant(PolyContextPtr ctx, const Rational& c);
  static Polynomial variable(PolyContextPtr ctx, std::size_t index);
  static Polynomial monomial(PolyContextPtr ctx, const Rational& c, Monomial m);

  const PolyContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const { return terms_.front(); }
  std::uint64_t total_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical printing, e.g. `3*x^2*y - 1/2*z + 7`.
  std::string to_string() const;

 private:
  PolyContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Parses `3*x^2*y - 1/2*z + 7` style input; also accepts parentheses and
/// integer powers of subexpressions. Throws std::invalid_argument.
Polynomial parse_polynomial(std::string_view text, const PolyContextPtr& ctx);

}  // namespace wpr
