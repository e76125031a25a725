#include "wpr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace wpr {

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GradedLex: return "glex";
  }
  return "grevlex";
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "glex" || name == "graded-lex" || name == "deglex") return MonomialOrder::GradedLex;
  throw std::invalid_argument("unknown monomial order: " + std::string(name));
}

Monomial::Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {
  for (auto x : exps) degree += x;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
  m.degree = a.degree + b.degree;
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] - b.exps[i];
  m.degree = a.degree - b.degree;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
    m.degree += m.exps[i];
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

PolyContext::PolyContext(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable name: " + vars_[i]);
}

int PolyContext::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.exps.size();
  switch (order_) {
    case MonomialOrder::Grevlex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
      return 0;
    case MonomialOrder::GradedLex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      [[fallthrough]];
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
      return 0;
  }
  return 0;
}

int PolyContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

const PolyContextPtr& pick(const PolyContextPtr& a, const PolyContextPtr& b) {
  if (a && b && a != b && !(*a == *b)) throw std::invalid_argument("polynomials from different rings");
  return a ? a : b;
}

// Sorts descending and merges equal monomials.
std::vector<Term> canonical_terms(const PolyContext& ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ctx.compare(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty()) {
        out.back().coeff = ctx.field().normalize(out.back().coeff);
        if (out.back().coeff == 0) out.pop_back();
      }
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    out.back().coeff = ctx.field().normalize(out.back().coeff);
    if (out.back().coeff == 0) out.pop_back();
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(PolyContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
  if (!ctx_) {
    if (!terms.empty()) throw std::invalid_argument("nonzero polynomial without a ring");
    return;
  }
  for (const auto& t : terms)
    if (t.mono.exps.size() != ctx_->nvars()) throw std::invalid_argument("monomial length mismatch");
  terms_ = canonical_terms(*ctx_, std::move(terms));
}

Polynomial Polynomial::constant(PolyContextPtr ctx, const Rational& c) {
  const std::size_t n = ctx->nvars();
  return Polynomial(std::move(ctx), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::variable(PolyContextPtr ctx, std::size_t index) {
  Monomial m(ctx->nvars());
  m.exps.at(index) = 1;
  m.degree = 1;
  return Polynomial(std::move(ctx), {Term{Rational(1), m}});
}

Polynomial Polynomial::monomial(PolyContextPtr ctx, const Rational& c, Monomial m) {
  return Polynomial(std::move(ctx), {Term{c, std::move(m)}});
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ctx_->field().neg(t.coeff);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const PolyContextPtr& ctx = pick(a.ctx_, b.ctx_);
  const Field& f = ctx->field();
  Polynomial r;
  r.ctx_ = ctx;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = ctx->compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) r.terms_.push_back(a.terms_[i++]);
    else if (c < 0) r.terms_.push_back(b.terms_[j++]);
    else {
      Rational s = f.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{s, a.terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const PolyContextPtr& ctx = pick(a.ctx_, b.ctx_);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].coeff, a.terms_[0].mono);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].coeff, b.terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back(Term{x.coeff * y.coeff, x.mono * y.mono});
  return Polynomial(ctx, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (is_zero()) return *this;
  Rational cc = ctx_->field().normalize(c);
  if (cc == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ctx_->field().mul(t.coeff, cc);
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (is_zero()) return *this;
  Rational cc = ctx_->field().normalize(c);
  if (cc == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff = ctx_->field().mul(t.coeff, cc);
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  if (e == 0) {
    if (!ctx_) throw std::invalid_argument("0^0 without a ring");
    return constant(ctx_, 1);
  }
  Polynomial result, base = *this;
  bool have = false;
  while (e) {
    if (e & 1u) {
      result = have ? result * base : base;
      have = true;
    }
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (!t.mono.exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->variables()[i];
      if (t.mono.exps[i] > 1) mono += "^" + std::to_string(t.mono.exps[i]);
    }
    if (mono.empty()) out += wpr::to_string(c);
    else if (c == 1) out += mono;
    else out += wpr::to_string(c) + "*" + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, const PolyContextPtr& ctx) : s_(s), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  Polynomial expr() {
    Polynomial acc;
    bool negative = false;
    if (eat('-')) negative = true;
    else eat('+');
    Polynomial t = term();
    acc = negative ? -t : t;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }
  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      Integer e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.is_zero() ? (e == 0 ? Polynomial::constant(ctx_, 1) : base) : base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Rational q(num);
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          Integer den = integer();
          if (den == 0) fail("zero denominator");
          q = Rational(num, den);
          q.canonicalize();
        } else {
          pos_ = save;
          fail("division is only allowed between integer literals");
        }
      }
      return Polynomial::constant(ctx_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ctx_->variable_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return Polynomial::variable(ctx_, static_cast<std::size_t>(idx));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const PolyContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyContextPtr& ctx) {
  if (!ctx) throw std::invalid_argument("parse_polynomial: no ring");
  return PolyParser(text, ctx).parse();
}

}  // namespace wpr
