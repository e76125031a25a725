#include "wpr/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace wpr {
namespace {

std::atomic<bool> g_audit_enabled{false};
std::atomic<std::uint64_t> g_audit_checked{0};
std::atomic<std::uint64_t> g_audit_failures{0};

int compare_terms(const PolyContext& ctx, const ModuleTerm& a, const ModuleTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return ctx.compare(a.mono, b.mono);
}

// f[from:] - c * m * g
ModuleVector sub_multiple(const PolyContext& ctx, const ModuleVector& f, const Rational& c, const Monomial& m,
                          const ModuleVector& g, std::size_t from = 0) {
  const Field& field = ctx.field();
  ModuleVector out;
  out.terms.reserve(f.terms.size() - from + g.terms.size());
  std::size_t i = from, j = 0;
  while (i < f.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(f.terms[i++]);
      continue;
    }
    ModuleTerm scaled{field.neg(field.mul(c, g.terms[j].coeff)), g.terms[j].mono * m, g.terms[j].comp};
    int cmp = i == f.terms.size() ? -1 : compare_terms(ctx, f.terms[i], scaled);
    if (cmp > 0) {
      out.terms.push_back(f.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back(std::move(scaled));
      ++j;
    } else {
      Rational s = field.add(f.terms[i].coeff, scaled.coeff);
      if (s != 0) out.terms.push_back(ModuleTerm{s, f.terms[i].mono, f.terms[i].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(const PolyContext& ctx, ModuleVector& v) {
  if (v.is_zero() || v.lead().coeff == 1) return;
  Rational inv = ctx.field().inverse(v.lead().coeff);
  for (auto& t : v.terms) t.coeff = ctx.field().mul(t.coeff, inv);
}

ModuleVector s_vector(const PolyContext& ctx, const ModuleVector& a, const ModuleVector& b) {
  Monomial l = lcm(a.lead().mono, b.lead().mono);
  ModuleVector left;
  Monomial qa = quotient(l, a.lead().mono);
  left.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) left.terms.push_back(ModuleTerm{t.coeff, t.mono * qa, t.comp});
  return sub_multiple(ctx, left, ctx.field().mul(a.lead().coeff, ctx.field().inverse(b.lead().coeff)),
                      quotient(l, b.lead().mono), b);
}

// Normal form of v against `basis`, ignoring basis[skip]; terms with
// component >= stop are left alone.
ModuleVector reduce_against(const PolyContext& ctx, const std::vector<ModuleVector>& basis, std::size_t skip,
                            ModuleVector v, std::uint32_t stop) {
  ModuleVector rest;
  std::size_t at = 0;
  while (at < v.terms.size()) {
    const ModuleTerm& t = v.terms[at];
    if (t.comp >= stop) break;
    const ModuleVector* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const ModuleTerm& lt = basis[k].lead();
      if (lt.comp == t.comp && lt.mono.divides(t.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor) {
      Rational c = ctx.field().mul(t.coeff, ctx.field().inverse(divisor->lead().coeff));
      v = sub_multiple(ctx, v, c, quotient(t.mono, divisor->lead().mono), *divisor, at);
      at = 0;
    } else {
      rest.terms.push_back(t);
      ++at;
    }
  }
  rest.terms.insert(rest.terms.end(), std::make_move_iterator(v.terms.begin() + static_cast<std::ptrdiff_t>(at)),
                    std::make_move_iterator(v.terms.end()));
  return rest;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
};

}  // namespace

ModuleVector to_module_vector(const std::vector<Polynomial>& column, std::uint32_t first_comp) {
  ModuleVector v;
  for (std::size_t k = 0; k < column.size(); ++k)
    for (const auto& t : column[k].terms())
      v.terms.push_back(ModuleTerm{t.coeff, t.mono, static_cast<std::uint32_t>(first_comp + k)});
  return v;
}

std::vector<Polynomial> to_polynomials(const PolyContextPtr& ctx, const ModuleVector& v, std::size_t rank,
                                       std::uint32_t first_comp) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v.terms) {
    if (t.comp < first_comp || t.comp >= first_comp + rank) continue;
    parts[t.comp - first_comp].push_back(Term{t.coeff, t.mono});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(p.empty() ? PolyContextPtr() : ctx, std::move(p));
  return out;
}

ModuleGroebnerBasis::ModuleGroebnerBasis(PolyContextPtr ctx, std::vector<ModuleVector> generators)
    : ctx_(std::move(ctx)) {
  compute(std::move(generators));
  finalize();
  if (g_audit_enabled.load()) {
    g_audit_checked.fetch_add(1);
    if (!verify()) g_audit_failures.fetch_add(1);
  }
}

ModuleVector ModuleGroebnerBasis::reduce(ModuleVector v, std::uint32_t stop_comp) const {
  return reduce_against(*ctx_, basis_, SIZE_MAX, std::move(v), stop_comp);
}

void ModuleGroebnerBasis::compute(std::vector<ModuleVector> gens) {
  const PolyContext& ctx = *ctx_;
  bool single_component = true;
  std::uint32_t comp0 = UINT32_MAX;
  for (const auto& g : gens)
    for (const auto& t : g.terms) {
      if (comp0 == UINT32_MAX) comp0 = t.comp;
      else if (t.comp != comp0) single_component = false;
    }

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](ModuleVector h) {
    make_monic(ctx, h);
    const std::size_t t = basis_.size();
    basis_.push_back(std::move(h));
    const ModuleTerm& lt = basis_[t].lead();
    for (std::size_t i = 0; i < t; ++i) {
      const ModuleTerm& li = basis_[i].lead();
      if (li.comp != lt.comp) continue;
      if (single_component && coprime(li.mono, lt.mono)) continue;
      queue.push_back(Pair{i, t, lcm(li.mono, lt.mono), lt.comp});
      pending.insert({i, t});
    }
  };

  for (auto& g : gens) {
    ModuleVector r = reduce(std::move(g));
    if (!r.is_zero()) add_element(std::move(r));
  }

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
      if (a.comp != b.comp) return a.comp > b.comp;
      return ctx.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    queue.erase(best);
    pending.erase({p.i, p.j});

    // Chain criterion: some k with lead(k) | lcm and both (i,k), (k,j) treated.
    bool skip = false;
    for (std::size_t k = 0; k < basis_.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      const ModuleTerm& lk = basis_[k].lead();
      if (lk.comp != p.comp || !lk.mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    ModuleVector r = reduce(s_vector(ctx, basis_[p.i], basis_[p.j]));
    if (!r.is_zero()) add_element(std::move(r));
  }
}

void ModuleGroebnerBasis::finalize() {
  const PolyContext& ctx = *ctx_;
  // Minimal basis: drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(basis_.size(), true);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const ModuleTerm& li = basis_[i].lead();
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModuleTerm& lj = basis_[j].lead();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      // Among equal leading terms keep the first.
      if (lj.mono == li.mono && j > i) continue;
      redundant = true;
    }
    keep[i] = !redundant;
  }
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis_[i]));
  basis_ = std::move(minimal);
  // Tail reduction.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    ModuleVector tail;
    tail.terms.assign(basis_[i].terms.begin() + 1, basis_[i].terms.end());
    ModuleVector reduced = reduce_against(ctx, basis_, i, std::move(tail), UINT32_MAX);
    basis_[i].terms.resize(1);
    basis_[i].terms.insert(basis_[i].terms.end(), reduced.terms.begin(), reduced.terms.end());
    make_monic(ctx, basis_[i]);
  }
  std::sort(basis_.begin(), basis_.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return compare_terms(ctx, a.lead(), b.lead()) > 0;
  });
}

bool ModuleGroebnerBasis::verify() const {
  const PolyContext& ctx = *ctx_;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i].lead().comp != basis_[j].lead().comp) continue;
      if (!reduce(s_vector(ctx, basis_[i], basis_[j])).is_zero()) return false;
    }
  return true;
}

Polynomial change_order(const Polynomial& f, const PolyContextPtr& target) {
  if (f.is_zero()) return f;
  const auto& src = *f.context();
  if (!(src.field() == target->field()) || src.variables() != target->variables())
    throw std::invalid_argument("polynomial is not in the basis ring");
  return Polynomial(target, f.terms());
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators) {
  PolyContextPtr ctx;
  for (const auto& g : generators)
    if (g.context()) {
      ctx = g.context();
      break;
    }
  if (generators.empty()) throw std::invalid_argument("groebner_basis: no generators");
  if (!ctx) return GroebnerBasis{nullptr, {}};
  return groebner_basis(generators, ctx->order());
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, MonomialOrder order) {
  if (generators.empty()) throw std::invalid_argument("groebner_basis: no generators");
  PolyContextPtr base;
  for (const auto& g : generators) {
    if (!g.context()) continue;
    if (!base) base = g.context();
    else if (!(*base == *g.context())) throw std::invalid_argument("groebner_basis: generators from different rings");
  }
  if (!base) return GroebnerBasis{nullptr, {}};
  PolyContextPtr ctx = base->order() == order
                           ? base
                           : std::make_shared<const PolyContext>(base->field(), base->variables(), order);
  std::vector<ModuleVector> gens;
  for (const auto& g : generators) gens.push_back(to_module_vector({change_order(g, ctx)}));
  ModuleGroebnerBasis mgb(ctx, std::move(gens));
  GroebnerBasis out{ctx, {}};
  for (const auto& v : mgb.elements()) out.generators.push_back(to_polynomials(ctx, v, 1)[0]);
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (!g.ctx || g.generators.empty()) return f;
  std::vector<ModuleVector> basis;
  basis.reserve(g.generators.size());
  for (const auto& p : g.generators) basis.push_back(to_module_vector({p}));
  ModuleVector r = reduce_against(*g.ctx, basis, SIZE_MAX, to_module_vector({change_order(f, g.ctx)}), UINT32_MAX);
  return to_polynomials(g.ctx, r, 1)[0];
}

void GroebnerAudit::enable(bool on) { g_audit_enabled.store(on); }
bool GroebnerAudit::enabled() { return g_audit_enabled.load(); }
std::uint64_t GroebnerAudit::checked() { return g_audit_checked.load(); }
std::uint64_t GroebnerAudit::failures() { return g_audit_failures.load(); }
void GroebnerAudit::reset() {
  g_audit_checked.store(0);
  g_audit_failures.store(0);
}

}  // namespace wpr
