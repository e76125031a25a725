#include "wpr/module.hpp"

#include <functional>
#include <stdexcept>

namespace wpr {
namespace {

RMatrix drop_zero_columns(const RingPtr& ring, const RMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = ring->is_zero(m(i, j));
    if (!zero) keep.push_back(j);
  }
  if (keep.size() == m.cols()) return m;
  RMatrix out = select_cols(m, keep);
  if (keep.empty()) out = RMatrix(m.rows(), 0);
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& removed) {
  std::vector<bool> gone(n, false);
  for (auto i : removed) gone[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!gone[i]) out.push_back(i);
  return out;
}

RMatrix rows_of(const RMatrix& m, const std::vector<std::size_t>& idx) {
  RMatrix out = select_rows(m, idx);
  if (idx.empty()) out = RMatrix(0, m.cols());
  return out;
}

RMatrix cols_of(const RMatrix& m, const std::vector<std::size_t>& idx) {
  RMatrix out = select_cols(m, idx);
  if (idx.empty()) out = RMatrix(m.rows(), 0);
  return out;
}

Minimized minimize_integers(const FpModule& m) {
  const RingPtr& ring = m.ring();
  const std::size_t g = m.generators();
  IntMatrix r = to_intmatrix(m.relations());
  IntMatrix u, uinv;
  std::vector<Integer> diag;
  if (r.cols() == 0 || g == 0) {
    u = uinv = identity_matrix<Integer>(g, Integer(1));
  } else {
    SnfResult snf = smith_normal_form(r);
    u = std::move(snf.U);
    uinv = hermite_normal_form(u).U;
    diag = snf.invariant_factors();
  }
  std::vector<std::size_t> keep;
  std::vector<Integer> torsion;
  for (std::size_t k = 0; k < diag.size(); ++k)
    if (diag[k] != 1) {
      keep.push_back(k);
      torsion.push_back(diag[k]);
    }
  for (std::size_t k = diag.size(); k < g; ++k) keep.push_back(k);
  RMatrix rel(keep.size(), torsion.size());
  for (std::size_t k = 0; k < torsion.size(); ++k) rel(k, k) = Elem(torsion[k]);
  Minimized out;
  out.module = FpModule(ring, keep.size(), rel, m.name());
  out.to_new = rows_of(to_rmatrix(u), keep);
  out.to_old = cols_of(to_rmatrix(uinv), keep);
  return out;
}

Minimized minimize_polynomial(const FpModule& m) {
  const RingPtr& ring = m.ring();
  std::size_t g = m.generators();
  RMatrix r = drop_zero_columns(ring, ring->normalize(m.relations()));
  RMatrix to_new = identity(g), to_old = identity(g);

  for (;;) {
    std::size_t pi = 0, pj = 0;
    std::optional<Elem> inv;
    for (std::size_t j = 0; j < r.cols() && !inv; ++j)
      for (std::size_t i = 0; i < g && !inv; ++i)
        if (!r(i, j).is_zero() && (inv = ring->obvious_inverse(r(i, j)))) {
          pi = i;
          pj = j;
        }
    if (!inv) break;
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (j == pj || r(pi, j).is_zero()) continue;
      Elem c = ring->normalize(r(pi, j) * *inv);
      for (std::size_t i = 0; i < g; ++i)
        if (!r(i, pj).is_zero()) r(i, j) = ring->normalize(r(i, j) - c * r(i, pj));
    }
    // e_pi = -inv * sum_{k != pi} r(k, pj) e_k in the quotient.
    std::vector<std::size_t> kept = complement(g, {pi});
    RMatrix p(g - 1, g);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      p(a, kept[a]) = Elem(1);
      p(a, pi) = ring->normalize(-(*inv * r(kept[a], pj)));
    }
    to_new = mul(ring, p, to_new);
    to_old = cols_of(to_old, kept);
    r = cols_of(rows_of(r, kept), complement(r.cols(), {pj}));
    r = drop_zero_columns(ring, r);
    --g;
  }

  if (g > 0 && r.cols() > 0) {
    Span span(ring, g, r, false);
    std::vector<std::size_t> zero_gens;
    for (std::size_t i = 0; i < g; ++i) {
      RVector e(g);
      e[i] = Elem(1);
      if (span.contains(e)) zero_gens.push_back(i);
    }
    if (!zero_gens.empty()) {
      std::vector<std::size_t> kept = complement(g, zero_gens);
      r = drop_zero_columns(ring, rows_of(r, kept));
      to_new = rows_of(to_new, kept);
      to_old = cols_of(to_old, kept);
      g = kept.size();
    }
  }
  if (g > 0 && r.cols() > 0) r = Span(ring, g, r, false).canonical_generators();
  if (r.cols() == 0) r = RMatrix(g, 0);

  Minimized out;
  out.module = FpModule(ring, g, r, m.name());
  out.to_new = std::move(to_new);
  out.to_old = std::move(to_old);
  return out;
}

}  // namespace

FpModule::FpModule(RingPtr ring, std::size_t generators, RMatrix relations, std::string name)
    : ring_(std::move(ring)), gens_(generators), name_(std::move(name)) {
  if (!ring_) throw std::invalid_argument("module without ring");
  if (relations.cols() == 0) {
    rel_ = RMatrix(gens_, 0);
  } else {
    if (relations.rows() != gens_) throw std::invalid_argument("relation matrix has the wrong number of rows");
    rel_ = ring_->normalize(relations);
  }
}

FpModule FpModule::free(RingPtr ring, std::size_t rank, std::string name) {
  return FpModule(std::move(ring), rank, RMatrix(rank, 0), std::move(name));
}

const Span& FpModule::relation_span() const {
  std::call_once(cache_->once, [&] { cache_->span = std::make_unique<Span>(ring_, gens_, rel_, false); });
  return *cache_->span;
}

bool is_zero(const FpModule& m) {
  if (m.generators() == 0) return true;
  if (m.relation_count() == 0) return false;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    RVector e(m.generators());
    e[i] = Elem(1);
    if (!m.is_zero_element(e)) return false;
  }
  return true;
}

Minimized minimize(const FpModule& m) {
  return m.ring()->is_integers() ? minimize_integers(m) : minimize_polynomial(m);
}

std::vector<Integer> invariant_factors(const FpModule& m) {
  if (!m.ring()->is_integers()) throw std::invalid_argument("invariant factors need the integers");
  Minimized mm = minimize(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < mm.module.generators(); ++i)
    out.push_back(i < mm.module.relation_count() ? mm.module.relations()(i, i).integer() : Integer(0));
  return out;
}

RVector apply(const RingPtr& ring, const RMatrix& m, const RVector& v) { return ring->normalize(multiply(m, v)); }

RMatrix mul(const RingPtr& ring, const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  return ring->normalize(multiply(a, b));
}

bool is_well_defined(const Morphism& f) {
  if (f.matrix.rows() != f.target.generators() || f.matrix.cols() != f.source.generators()) return false;
  if (f.source.relation_count() == 0) return true;
  RMatrix img = mul(f.source.ring(), f.matrix, f.source.relations());
  for (std::size_t j = 0; j < img.cols(); ++j)
    if (!f.target.is_zero_element(img.column(j))) return false;
  return true;
}

Morphism make_morphism(FpModule source, FpModule target, RMatrix matrix) {
  if (matrix.rows() == 0 && matrix.cols() == 0) matrix = RMatrix(target.generators(), source.generators());
  Morphism f{std::move(source), std::move(target), {}};
  f.matrix = f.source.ring()->normalize(matrix);
  if (f.matrix.rows() != f.target.generators() || f.matrix.cols() != f.source.generators())
    throw std::invalid_argument("morphism matrix has the wrong shape");
  if (!is_well_defined(f)) throw std::invalid_argument("morphism is not well defined");
  return f;
}

Morphism identity_morphism(const FpModule& m) { return Morphism{m, m, identity(m.generators())}; }

Morphism compose(const Morphism& g, const Morphism& f) {
  return Morphism{f.source, g.target, mul(f.source.ring(), g.matrix, f.matrix)};
}

bool is_zero(const Morphism& f) {
  for (std::size_t j = 0; j < f.matrix.cols(); ++j)
    if (!f.target.is_zero_element(f.matrix.column(j))) return false;
  return true;
}

bool equal(const Morphism& f, const Morphism& g) {
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
  return is_zero(Morphism{f.source, f.target, subtract(f.matrix, g.matrix)});
}

std::optional<RVector> Subquotient::coordinates(const RVector& v) const {
  auto c = lifter->lift(v);
  if (!c) return std::nullopt;
  RVector head(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(raw_generators));
  return apply(ambient.ring(), to_new, head);
}

RMatrix Subquotient::coordinates(const RMatrix& columns) const {
  RMatrix out(module.generators(), columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    auto c = coordinates(columns.column(j));
    if (!c) throw std::invalid_argument("element does not lie in the subquotient");
    out.set_column(j, *c);
  }
  return out;
}

Morphism Subquotient::inclusion() const {
  if (!is_submodule) throw std::logic_error("inclusion of a proper subquotient");
  return Morphism{module, ambient, representatives};
}

Subquotient subquotient(const FpModule& ambient, const RMatrix& generators, const RMatrix& extra_relations) {
  const RingPtr& ring = ambient.ring();
  const std::size_t g = ambient.generators();
  RMatrix gens = generators.cols() ? ring->normalize(generators) : RMatrix(g, 0);
  RMatrix extra = extra_relations.cols() ? ring->normalize(extra_relations) : RMatrix(g, 0);
  if (gens.rows() != g || extra.rows() != g) throw std::invalid_argument("subquotient: ambient dimension mismatch");
  const std::size_t t = gens.cols();

  Subquotient s;
  s.ambient = ambient;
  s.is_submodule = extra.cols() == 0;
  s.raw_generators = t;
  RMatrix big = hcat(hcat(gens, extra), ambient.relations());
  if (big.rows() != g) big = RMatrix(g, 0);
  s.lifter = std::make_shared<const Span>(ring, g, big, true);
  RMatrix syz = s.lifter->syzygies();
  std::vector<std::size_t> top(t);
  for (std::size_t i = 0; i < t; ++i) top[i] = i;
  RMatrix pres = drop_zero_columns(ring, rows_of(syz, top));
  Minimized mm = minimize(FpModule(ring, t, pres));
  s.module = std::move(mm.module);
  s.to_new = std::move(mm.to_new);
  s.representatives = t ? mul(ring, gens, mm.to_old) : RMatrix(g, 0);
  if (s.representatives.cols() == 0) s.representatives = RMatrix(g, 0);
  return s;
}

Subquotient kernel(const Morphism& f) {
  const RingPtr& ring = f.source.ring();
  const std::size_t gm = f.source.generators();
  const std::size_t gn = f.target.generators();
  if (gm == 0) return subquotient(f.source, RMatrix(0, 0));
  RMatrix k;
  if (gn == 0) {
    k = identity(gm);
  } else {
    RMatrix big = hcat(f.matrix, f.target.relations());
    RMatrix syz = Span(ring, gn, big, true).syzygies();
    std::vector<std::size_t> top(gm);
    for (std::size_t i = 0; i < gm; ++i) top[i] = i;
    k = drop_zero_columns(ring, rows_of(syz, top));
  }
  return subquotient(f.source, k);
}

Subquotient image(const Morphism& f) { return subquotient(f.target, f.matrix); }

Minimized cokernel(const Morphism& f) {
  const FpModule& n = f.target;
  return minimize(FpModule(n.ring(), n.generators(), hcat(n.relations(), f.matrix)));
}

FpModule direct_sum(const std::vector<FpModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  std::size_t g = 0;
  RMatrix rel;
  for (const auto& p : parts) {
    g += p.generators();
    rel = block_diagonal(rel, p.relations());
  }
  return FpModule(parts.front().ring(), g, rel);
}

FpModule tensor_module(const FpModule& m, const FpModule& n) {
  const std::size_t g = m.generators(), h = n.generators();
  RMatrix rel = hcat(kron(m.relations(), identity(h)), kron(identity(g), n.relations()));
  if (rel.rows() != g * h) rel = RMatrix(g * h, 0);
  return FpModule(m.ring(), g * h, rel);
}

Subquotient hom_module(const FpModule& m, const FpModule& n) {
  const std::size_t g = m.generators();
  std::vector<FpModule> copies(g, n);
  FpModule ambient = g ? direct_sum(copies) : FpModule::zero(m.ring());
  const std::size_t s = m.relation_count();
  std::vector<FpModule> rel_copies(s, n);
  FpModule target = s ? direct_sum(rel_copies) : FpModule::zero(m.ring());
  RMatrix phi = kron(transpose(m.relations()), identity(n.generators()));
  if (phi.rows() != target.generators() || phi.cols() != ambient.generators())
    phi = RMatrix(target.generators(), ambient.generators());
  return kernel(Morphism{ambient, target, m.ring()->normalize(phi)});
}

std::vector<Elem> ideal_power(const RingPtr& ring, const std::vector<Elem>& gens, unsigned i) {
  if (i < 1) throw std::invalid_argument("ideal power exponent must be at least 1");
  std::vector<Elem> out;
  std::function<void(std::size_t, unsigned, Elem)> rec = [&](std::size_t start, unsigned left, Elem acc) {
    if (left == 0) {
      Elem e = ring->normalize(acc);
      if (!e.is_zero()) out.push_back(std::move(e));
      return;
    }
    for (std::size_t k = start; k < gens.size(); ++k) rec(k, left - 1, ring->normalize(acc * gens[k]));
  };
  rec(0, i, Elem(1));
  return out;
}

std::vector<Elem> power_sequence(const RingPtr& ring, const std::vector<Elem>& gens, unsigned i) {
  if (i < 1) throw std::invalid_argument("power exponent must be at least 1");
  std::vector<Elem> out;
  for (const auto& a : gens) {
    Elem p(1);
    for (unsigned k = 0; k < i; ++k) p = ring->normalize(p * a);
    out.push_back(std::move(p));
  }
  return out;
}

FpModule quotient_module(const RingPtr& ring, const std::vector<Elem>& gens) {
  RMatrix row(1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) row(0, j) = gens[j];
  return FpModule(ring, 1, gens.empty() ? RMatrix(1, 0) : row);
}

bool ideal_contains(const RingPtr& ring, const std::vector<Elem>& gens, const Elem& f) {
  return quotient_module(ring, gens).is_zero_element({f});
}

Subquotient annihilator(const FpModule& m, const std::vector<Elem>& gens) {
  const std::size_t g = m.generators();
  if (gens.empty()) return subquotient(m, identity(g));
  std::vector<FpModule> copies(gens.size(), m);
  FpModule target = direct_sum(copies);
  RMatrix mat;
  for (const auto& a : gens) mat = mat.rows() ? vcat(mat, scale(a, identity(g))) : scale(a, identity(g));
  return kernel(Morphism{m, target, m.ring()->normalize(mat)});
}

bool submodule_contains(const FpModule& m, const RMatrix& a, const RMatrix& b) {
  const std::size_t g = m.generators();
  RMatrix big = hcat(a.cols() ? a : RMatrix(g, 0), m.relations());
  if (big.rows() != g) big = RMatrix(g, 0);
  Span span(m.ring(), g, big, false);
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!span.contains(b.column(j))) return false;
  return true;
}

bool submodule_equal(const FpModule& m, const RMatrix& a, const RMatrix& b) {
  return submodule_contains(m, a, b) && submodule_contains(m, b, a);
}

}  // namespace wpr
