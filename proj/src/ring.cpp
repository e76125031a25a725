#include "wpr/ring.hpp"

#include "wpr/linalg.hpp"

#include <stdexcept>

namespace wpr {
namespace {

Polynomial promote(const Integer& n, const PolyContextPtr& ctx) {
  if (n == 0) return Polynomial();
  return Polynomial::constant(ctx, Rational(n));
}

const PolyContextPtr* context_of(const Elem& a) {
  if (a.holds_integer()) return nullptr;
  const auto& ctx = a.polynomial().context();
  return ctx ? &ctx : nullptr;
}

Polynomial as_polynomial(const Elem& a, const PolyContextPtr& ctx) {
  return a.holds_integer() ? promote(a.integer(), ctx) : a.polynomial();
}

// Common ring of two operands; null when both are plain integers.
const PolyContextPtr* common_context(const Elem& a, const Elem& b) {
  const PolyContextPtr* ca = context_of(a);
  return ca ? ca : context_of(b);
}

Integer as_integer(const Elem& a) {
  if (a.holds_integer()) return a.integer();
  // A polynomial without context is zero.
  if (!a.polynomial().is_zero()) throw std::invalid_argument("expected an integer");
  return 0;
}

}  // namespace

Elem::Elem(Polynomial p) : v_(std::move(p)) {}

bool Elem::is_zero() const { return holds_integer() ? integer() == 0 : polynomial().is_zero(); }

Elem Elem::operator-() const {
  if (holds_integer()) return Elem(Integer(-integer()));
  return Elem(-polynomial());
}

Elem operator+(const Elem& a, const Elem& b) {
  if (const PolyContextPtr* ctx = common_context(a, b)) return Elem(as_polynomial(a, *ctx) + as_polynomial(b, *ctx));
  return Elem(Integer(as_integer(a) + as_integer(b)));
}

Elem operator-(const Elem& a, const Elem& b) {
  if (const PolyContextPtr* ctx = common_context(a, b)) return Elem(as_polynomial(a, *ctx) - as_polynomial(b, *ctx));
  return Elem(Integer(as_integer(a) - as_integer(b)));
}

Elem operator*(const Elem& a, const Elem& b) {
  if (a.is_zero() || b.is_zero()) return Elem();
  if (common_context(a, b)) {
    if (a.holds_integer()) return Elem(b.polynomial().scaled(Rational(a.integer())));
    if (b.holds_integer()) return Elem(a.polynomial().scaled(Rational(b.integer())));
    return Elem(a.polynomial() * b.polynomial());
  }
  return Elem(Integer(as_integer(a) * as_integer(b)));
}

bool operator==(const Elem& a, const Elem& b) {
  if (const PolyContextPtr* ctx = common_context(a, b)) return as_polynomial(a, *ctx) == as_polynomial(b, *ctx);
  return as_integer(a) == as_integer(b);
}

std::string Elem::to_string() const { return holds_integer() ? wpr::to_string(integer()) : polynomial().to_string(); }

RingPtr Ring::integers() {
  static const RingPtr z = [] { return RingPtr(new Ring()); }();
  return z;
}

RingPtr Ring::polynomial(PolyContextPtr ctx, const std::vector<Polynomial>& quotient) {
  if (!ctx) throw std::invalid_argument("polynomial ring without context");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Polynomial;
  r->ctx_ = std::move(ctx);
  std::vector<Polynomial> nonzero;
  for (const auto& q : quotient) {
    if (q.is_zero()) continue;
    if (!(*q.context() == *r->ctx_)) throw std::invalid_argument("quotient generator from a different ring");
    nonzero.push_back(q);
  }
  r->quotient_input_ = nonzero;
  if (!nonzero.empty()) r->quotient_ = groebner_basis(nonzero, r->ctx_->order());
  return r;
}

Elem Ring::normalize(const Elem& a) const {
  if (kind_ == Kind::Integers) return Elem(as_integer(a));
  Polynomial p = as_polynomial(a, ctx_);
  if (!p.is_zero() && !(*p.context() == *ctx_)) throw std::invalid_argument("element from a different ring");
  if (is_quotient()) p = normal_form(p, quotient_);
  return Elem(std::move(p));
}

RMatrix Ring::normalize(const RMatrix& m) const {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = normalize(m(i, j));
  return out;
}

RVector Ring::normalize(const RVector& v) const {
  RVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(normalize(e));
  return out;
}

bool Ring::is_zero(const Elem& a) const { return normalize(a).is_zero(); }

bool Ring::is_zero(const RMatrix& m) const {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

std::optional<Elem> Ring::obvious_inverse(const Elem& a) const {
  Elem n = normalize(a);
  if (kind_ == Kind::Integers) {
    if (n.integer() == 1 || n.integer() == -1) return n;
    return std::nullopt;
  }
  const Polynomial& p = n.polynomial();
  if (p.is_zero() || !p.is_constant()) return std::nullopt;
  return Elem(Polynomial::constant(ctx_, ctx_->field().inverse(p.leading_term().coeff)));
}

Elem Ring::parse(const std::string& text) const {
  if (kind_ == Kind::Integers) {
    static const PolyContextPtr scalars = std::make_shared<const PolyContext>(Field(), std::vector<std::string>{});
    Polynomial p = parse_polynomial(text, scalars);
    if (p.is_zero()) return Elem();
    Rational c = p.leading_term().coeff;
    if (c.get_den() != 1) throw std::invalid_argument("expected an integer, got '" + text + "'");
    return Elem(Integer(c.get_num()));
  }
  return normalize(Elem(parse_polynomial(text, ctx_)));
}

std::string Ring::format(const Elem& a) const { return normalize(a).to_string(); }

std::string Ring::name() const {
  if (kind_ == Kind::Integers) return "ZZ";
  std::string s = ctx_->field().name() + "[";
  for (std::size_t i = 0; i < ctx_->nvars(); ++i) s += (i ? "," : "") + ctx_->variables()[i];
  s += "]";
  if (is_quotient()) {
    s += "/(";
    for (std::size_t i = 0; i < quotient_input_.size(); ++i) s += (i ? ", " : "") + quotient_input_[i].to_string();
    s += ")";
  }
  return s;
}

bool operator==(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Ring::Kind::Integers) return true;
  return *a.ctx_ == *b.ctx_ && a.quotient_.generators == b.quotient_.generators;
}

RMatrix to_rmatrix(const IntMatrix& m) {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Elem(m(i, j));
  return out;
}

IntMatrix to_intmatrix(const RMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = as_integer(m(i, j));
  return out;
}

RMatrix identity(std::size_t n) { return identity_matrix<Elem>(n, Elem(1)); }

RVector column_of(const RMatrix& m, std::size_t j) { return m.column(j); }

// ---------------------------------------------------------------------------

Span::Span(RingPtr ring, std::size_t rank, const RMatrix& generators, bool track_lift)
    : ring_(std::move(ring)), rank_(rank), ngens_(generators.cols()), track_(track_lift) {
  if (generators.cols() > 0 && generators.rows() != rank) throw std::invalid_argument("Span: generator length");
  if (ring_->is_integers()) {
    int_gens_ = generators.cols() ? to_intmatrix(generators) : IntMatrix(rank, 0);
    if (rank_ > 0 && ngens_ > 0) {
      HnfResult h = hermite_normal_form(transpose(int_gens_));
      hnf_ = std::move(h.H);
      hnf_u_ = std::move(h.U);
      pivots_ = std::move(h.pivots);
    }
    return;
  }
  const PolyContextPtr& ctx = ring_->context();
  const std::size_t width = track_ ? rank_ + ngens_ : rank_;
  std::vector<ModuleVector> gens;
  for (std::size_t j = 0; j < ngens_; ++j) {
    std::vector<Polynomial> col(width);
    for (std::size_t i = 0; i < rank_; ++i) {
      Elem e = ring_->normalize(generators(i, j));
      col[i] = e.polynomial();
    }
    if (track_) col[rank_ + j] = Polynomial::constant(ctx, 1);
    ModuleVector v = to_module_vector(col);
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < rank_; ++c)
    for (const auto& q : ring_->quotient_basis().generators) {
      ModuleVector v;
      for (const auto& t : q.terms()) v.terms.push_back(ModuleTerm{t.coeff, t.mono, static_cast<std::uint32_t>(c)});
      gens.push_back(std::move(v));
    }
  gb_ = std::make_shared<ModuleGroebnerBasis>(ctx, std::move(gens));
}

RVector Span::reduce(const RVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("Span::reduce: vector length");
  if (ring_->is_integers()) {
    std::vector<Integer> w(rank_);
    for (std::size_t i = 0; i < rank_; ++i) w[i] = ring_->normalize(v[i]).integer();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const std::size_t c = pivots_[k];
      Integer q = floor_div(w[c], hnf_(k, c));
      if (q == 0) continue;
      for (std::size_t i = c; i < rank_; ++i) w[i] -= q * hnf_(k, i);
    }
    RVector out;
    out.reserve(rank_);
    for (auto& x : w) out.emplace_back(std::move(x));
    return out;
  }
  std::vector<Polynomial> col(rank_);
  for (std::size_t i = 0; i < rank_; ++i) col[i] = ring_->normalize(v[i]).polynomial();
  ModuleVector r = gb_->reduce(to_module_vector(col), static_cast<std::uint32_t>(rank_));
  RVector out;
  for (auto& p : to_polynomials(ring_->context(), r, rank_)) out.emplace_back(std::move(p));
  return out;
}

bool Span::contains(const RVector& v) const {
  for (const auto& e : reduce(v))
    if (!e.is_zero()) return false;
  return true;
}

std::optional<RVector> Span::lift(const RVector& v) const {
  if (!track_) throw std::logic_error("Span::lift requires lift tracking");
  if (v.size() != rank_) throw std::invalid_argument("Span::lift: vector length");
  if (ring_->is_integers()) {
    std::vector<Integer> w(rank_), coeff(ngens_);
    for (std::size_t i = 0; i < rank_; ++i) w[i] = ring_->normalize(v[i]).integer();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const std::size_t c = pivots_[k];
      Integer q = floor_div(w[c], hnf_(k, c));
      if (q == 0) continue;
      for (std::size_t i = c; i < rank_; ++i) w[i] -= q * hnf_(k, i);
      for (std::size_t j = 0; j < ngens_; ++j) coeff[j] += q * hnf_u_(k, j);
    }
    for (const auto& x : w)
      if (x != 0) return std::nullopt;
    RVector out;
    for (auto& x : coeff) out.emplace_back(std::move(x));
    return out;
  }
  std::vector<Polynomial> col(rank_);
  for (std::size_t i = 0; i < rank_; ++i) col[i] = ring_->normalize(v[i]).polynomial();
  ModuleVector r = gb_->reduce(to_module_vector(col), static_cast<std::uint32_t>(rank_));
  if (!r.is_zero() && r.lead().comp < rank_) return std::nullopt;
  RVector out;
  for (auto& p : to_polynomials(ring_->context(), r, ngens_, static_cast<std::uint32_t>(rank_)))
    out.push_back(ring_->normalize(Elem(-p)));
  return out;
}

RMatrix Span::syzygies() const {
  if (!track_) throw std::logic_error("Span::syzygies requires lift tracking");
  if (ring_->is_integers()) {
    if (rank_ == 0 || ngens_ == 0) return identity(ngens_);
    return to_rmatrix(integer_kernel(int_gens_));
  }
  std::vector<RVector> cols;
  for (const auto& e : gb_->elements()) {
    if (e.lead().comp < rank_) continue;
    RVector c;
    bool nonzero = false;
    for (auto& p : to_polynomials(ring_->context(), e, ngens_, static_cast<std::uint32_t>(rank_))) {
      c.push_back(ring_->normalize(Elem(std::move(p))));
      nonzero = nonzero || !c.back().is_zero();
    }
    if (nonzero) cols.push_back(std::move(c));
  }
  RMatrix out(ngens_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, cols[j]);
  return out;
}

RMatrix Span::canonical_generators() const {
  if (track_) throw std::logic_error("Span::canonical_generators requires a plain span");
  if (ring_->is_integers()) {
    RMatrix out(rank_, pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      for (std::size_t i = 0; i < rank_; ++i) out(i, k) = Elem(hnf_(k, i));
    return out;
  }
  std::vector<RVector> cols;
  for (const auto& e : gb_->elements()) {
    RVector c;
    bool nonzero = false;
    for (auto& p : to_polynomials(ring_->context(), e, rank_)) {
      c.push_back(ring_->normalize(Elem(std::move(p))));
      nonzero = nonzero || !c.back().is_zero();
    }
    if (nonzero) cols.push_back(std::move(c));
  }
  RMatrix out(rank_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, cols[j]);
  return out;
}

}  // namespace wpr
