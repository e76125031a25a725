#include "wpr/complex.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace wpr {
namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_failures{0};

RMatrix zeros(std::size_t r, std::size_t c) { return RMatrix(r, c); }

void paste(RMatrix& dst, const RMatrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (!src(i, j).is_zero()) dst(r0 + i, c0 + j) = src(i, j);
}

Elem sign(int k) { return Elem(k % 2 == 0 ? 1L : -1L); }

// Blocks of a total complex in degree k: (i, k - i) for i ascending.
struct Block {
  int i;
  std::size_t offset, size;
};

std::vector<Block> tensor_blocks(const Complex& c, const Complex& d, int k) {
  std::vector<Block> out;
  std::size_t off = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    int j = k - i;
    if (j < d.lo() || j > d.hi()) continue;
    std::size_t s = c.at(i).generators() * d.at(j).generators();
    out.push_back(Block{i, off, s});
    off += s;
  }
  return out;
}

// Hom^k blocks: i ranges over C's degrees with i + k in D's range.
std::vector<Block> hom_blocks(const Complex& c, const Complex& d, int k,
                              const std::vector<std::size_t>* sizes = nullptr) {
  std::vector<Block> out;
  std::size_t off = 0, idx = 0;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    int j = i + k;
    if (j < d.lo() || j > d.hi()) continue;
    std::size_t s = sizes ? (*sizes)[idx++] : c.at(i).generators() * d.at(j).generators();
    out.push_back(Block{i, off, s});
    off += s;
  }
  return out;
}

std::size_t total(const std::vector<Block>& b) { return b.empty() ? 0 : b.back().offset + b.back().size; }

const Block* find_block(const std::vector<Block>& blocks, int i) {
  for (const auto& b : blocks)
    if (b.i == i) return &b;
  return nullptr;
}

}  // namespace

Complex::Complex(RingPtr ring, int lo, std::vector<FpModule> modules, std::vector<RMatrix> differentials)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), zero_(FpModule::zero(ring_)) {
  if (modules_.empty()) modules_.push_back(FpModule::zero(ring_));
  if (differentials.size() + 1 != modules_.size() && !(differentials.empty() && modules_.size() == 1))
    throw std::invalid_argument("complex needs one differential between consecutive modules");
  for (std::size_t k = 0; k + 1 < modules_.size(); ++k) {
    const int q = lo_ + static_cast<int>(k);
    RMatrix m = differentials[k];
    if (m.rows() == 0 && m.cols() == 0) m = zeros(modules_[k + 1].generators(), modules_[k].generators());
    if (m.rows() != modules_[k + 1].generators() || m.cols() != modules_[k].generators())
      throw std::invalid_argument("differential in degree " + std::to_string(q) + " has the wrong shape");
    m = ring_->normalize(m);
    if (!is_well_defined(Morphism{modules_[k], modules_[k + 1], m}))
      throw std::invalid_argument("differential in degree " + std::to_string(q) + " is not well defined");
    diffs_.push_back(std::move(m));
  }
  for (std::size_t k = 0; k + 2 < modules_.size(); ++k) {
    g_checked.fetch_add(1);
    Morphism dd{modules_[k], modules_[k + 2], mul(ring_, diffs_[k + 1], diffs_[k])};
    if (!is_zero(dd)) {
      g_failures.fetch_add(1);
      throw std::invalid_argument("d o d is not zero starting in degree " + std::to_string(lo_ + static_cast<int>(k)));
    }
  }
}

Complex Complex::concentrated(const FpModule& m, int degree) { return Complex(m.ring(), degree, {m}, {}); }

const FpModule& Complex::at(int q) const {
  if (q < lo_ || q > hi()) return zero_;
  return modules_[static_cast<std::size_t>(q - lo_)];
}

RMatrix Complex::d(int q) const {
  if (q < lo_ || q >= hi()) return zeros(at(q + 1).generators(), at(q).generators());
  return diffs_[static_cast<std::size_t>(q - lo_)];
}

bool Complex::is_free() const {
  return std::all_of(modules_.begin(), modules_.end(), [this](const FpModule& m) {
    return m.relation_count() == 0 || ring_->is_zero(m.relations());
  });
}

ComplexMorphism::ComplexMorphism(Complex source, Complex target, int lo, std::vector<RMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)), lo_(lo), maps_(std::move(maps)) {
  const RingPtr& ring = source_.ring();
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const int q = lo_ + static_cast<int>(k);
    RMatrix& m = maps_[k];
    if (m.rows() == 0 && m.cols() == 0) m = zeros(target_.at(q).generators(), source_.at(q).generators());
    if (m.rows() != target_.at(q).generators() || m.cols() != source_.at(q).generators())
      throw std::invalid_argument("chain map component in degree " + std::to_string(q) + " has the wrong shape");
    m = ring->normalize(m);
    if (!is_well_defined(Morphism{source_.at(q), target_.at(q), m}))
      throw std::invalid_argument("chain map component in degree " + std::to_string(q) + " is not well defined");
  }
  const int lo_q = std::min(source_.lo(), target_.lo()) - 1;
  const int hi_q = std::max(source_.hi(), target_.hi());
  for (int q = lo_q; q <= hi_q; ++q) {
    RMatrix lhs = mul(ring, target_.d(q), at(q));
    RMatrix rhs = mul(ring, at(q + 1), source_.d(q));
    if (!is_zero(Morphism{source_.at(q), target_.at(q + 1), subtract(lhs, rhs)}))
      throw std::invalid_argument("chain map does not commute with the differentials in degree " + std::to_string(q));
  }
}

RMatrix ComplexMorphism::at(int q) const {
  if (q < lo_ || q >= lo_ + static_cast<int>(maps_.size()))
    return zeros(target_.at(q).generators(), source_.at(q).generators());
  return maps_[static_cast<std::size_t>(q - lo_)];
}

ComplexMorphism identity_morphism(const Complex& c) {
  std::vector<RMatrix> maps;
  for (int q = c.lo(); q <= c.hi(); ++q) maps.push_back(identity(c.at(q).generators()));
  return ComplexMorphism(c, c, c.lo(), std::move(maps));
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
  const Complex& s = f.source();
  std::vector<RMatrix> maps;
  for (int q = s.lo(); q <= s.hi(); ++q) maps.push_back(mul(s.ring(), g.at(q), f.at(q)));
  return ComplexMorphism(s, g.target(), s.lo(), std::move(maps));
}

Subquotient cohomology(const Complex& c, int q) {
  const FpModule& m = c.at(q);
  if (m.generators() == 0) return subquotient(m, RMatrix(0, 0));
  Subquotient cycles = kernel(Morphism{m, c.at(q + 1), c.d(q)});
  RMatrix boundaries = c.d(q - 1);
  return subquotient(m, cycles.representatives, boundaries);
}

Morphism induced_map(const ComplexMorphism& f, int q, const Subquotient& hs, const Subquotient& ht) {
  RMatrix images = mul(f.source().ring(), f.at(q), hs.representatives);
  if (images.rows() != ht.ambient.generators()) images = RMatrix(ht.ambient.generators(), hs.module.generators());
  return Morphism{hs.module, ht.module, ht.coordinates(images)};
}

Morphism induced_map(const ComplexMorphism& f, int q) {
  return induced_map(f, q, cohomology(f.source(), q), cohomology(f.target(), q));
}

Complex tensor(const Complex& c, const Complex& d) {
  const RingPtr& ring = c.ring();
  const int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();
  std::vector<FpModule> mods;
  for (int k = lo; k <= hi; ++k) {
    std::vector<FpModule> parts;
    for (const auto& b : tensor_blocks(c, d, k)) parts.push_back(tensor_module(c.at(b.i), d.at(k - b.i)));
    mods.push_back(parts.empty() ? FpModule::zero(ring) : direct_sum(parts));
  }
  std::vector<RMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    auto src = tensor_blocks(c, d, k), tgt = tensor_blocks(c, d, k + 1);
    RMatrix m = zeros(total(tgt), total(src));
    for (const auto& b : src) {
      const int i = b.i, j = k - i;
      const std::size_t g = c.at(i).generators(), h = d.at(j).generators();
      if (const Block* t = find_block(tgt, i + 1)) paste(m, kron(c.d(i), identity(h)), t->offset, b.offset);
      if (const Block* t = find_block(tgt, i)) paste(m, scale(sign(i), kron(identity(g), d.d(j))), t->offset, b.offset);
    }
    diffs.push_back(std::move(m));
  }
  return Complex(ring, lo, std::move(mods), std::move(diffs));
}

ComplexMorphism tensor(const ComplexMorphism& f, const ComplexMorphism& g) {
  Complex src = tensor(f.source(), g.source());
  Complex tgt = tensor(f.target(), g.target());
  std::vector<RMatrix> maps;
  for (int k = src.lo(); k <= src.hi(); ++k) {
    auto sb = tensor_blocks(f.source(), g.source(), k);
    auto tb = tensor_blocks(f.target(), g.target(), k);
    RMatrix m = zeros(total(tb), total(sb));
    for (const auto& b : sb)
      if (const Block* t = find_block(tb, b.i)) paste(m, kron(f.at(b.i), g.at(k - b.i)), t->offset, b.offset);
    maps.push_back(std::move(m));
  }
  const int lo = src.lo();
  return ComplexMorphism(std::move(src), std::move(tgt), lo, std::move(maps));
}

HomComplex hom_complex(const Complex& c, const Complex& d) {
  const RingPtr& ring = c.ring();
  const int lo = d.lo() - c.hi(), hi = d.hi() - c.lo();
  HomComplex out;
  out.underived = !c.is_free();

  // Ambient differential on prod_i (D^{i+k})^{g_i}.
  auto ambient_d = [&](int k) {
    auto src = hom_blocks(c, d, k), tgt = hom_blocks(c, d, k + 1);
    RMatrix m = zeros(total(tgt), total(src));
    for (const auto& b : src) {
      const int i = b.i;
      const std::size_t g = c.at(i).generators(), h = d.at(i + k).generators();
      if (const Block* t = find_block(tgt, i)) paste(m, kron(identity(g), d.d(i + k)), t->offset, b.offset);
      if (const Block* t = find_block(tgt, i - 1))
        paste(m, scale(-sign(k), kron(transpose(c.d(i - 1)), identity(h))), t->offset, b.offset);
    }
    return m;
  };

  if (!out.underived) {
    std::vector<FpModule> mods;
    for (int k = lo; k <= hi; ++k) {
      std::vector<FpModule> parts;
      for (const auto& b : hom_blocks(c, d, k))
        for (std::size_t j = 0; j < c.at(b.i).generators(); ++j) parts.push_back(d.at(b.i + k));
      mods.push_back(parts.empty() ? FpModule::zero(ring) : direct_sum(parts));
    }
    std::vector<RMatrix> diffs;
    for (int k = lo; k < hi; ++k) diffs.push_back(ambient_d(k));
    out.complex = Complex(ring, lo, std::move(mods), std::move(diffs));
    return out;
  }

  // General sources: each block is the Hom module of the presentations.
  std::vector<std::vector<Subquotient>> homs;
  std::vector<FpModule> mods;
  for (int k = lo; k <= hi; ++k) {
    std::vector<Subquotient> row;
    std::vector<FpModule> parts;
    for (const auto& b : hom_blocks(c, d, k)) {
      row.push_back(hom_module(c.at(b.i), d.at(b.i + k)));
      parts.push_back(row.back().module);
    }
    mods.push_back(parts.empty() ? FpModule::zero(ring) : direct_sum(parts));
    homs.push_back(std::move(row));
  }
  std::vector<RMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    const auto& src = homs[static_cast<std::size_t>(k - lo)];
    const auto& tgt = homs[static_cast<std::size_t>(k + 1 - lo)];
    auto amb_src = hom_blocks(c, d, k), amb_tgt = hom_blocks(c, d, k + 1);
    std::vector<std::size_t> ssz, tsz;
    for (const auto& s : src) ssz.push_back(s.module.generators());
    for (const auto& t : tgt) tsz.push_back(t.module.generators());
    auto mod_src = hom_blocks(c, d, k, &ssz), mod_tgt = hom_blocks(c, d, k + 1, &tsz);
    RMatrix reps = zeros(total(amb_src), total(mod_src));
    for (std::size_t b = 0; b < src.size(); ++b) paste(reps, src[b].representatives, amb_src[b].offset, mod_src[b].offset);
    RMatrix images = mul(ring, ambient_d(k), reps);
    RMatrix m = zeros(total(mod_tgt), total(mod_src));
    for (std::size_t b = 0; b < tgt.size(); ++b) {
      RMatrix part = submatrix(images, amb_tgt[b].offset, 0, amb_tgt[b].size, images.cols());
      paste(m, tgt[b].coordinates(part), mod_tgt[b].offset, 0);
    }
    diffs.push_back(std::move(m));
  }
  out.complex = Complex(ring, lo, std::move(mods), std::move(diffs));
  return out;
}

ComplexMorphism hom_precompose(const ComplexMorphism& t, const Complex& d) {
  const Complex& c = t.target();
  const Complex& cp = t.source();
  if (!c.is_free() || !cp.is_free()) throw std::invalid_argument("hom_precompose needs free sources");
  Complex src = hom_complex(c, d).complex;
  Complex tgt = hom_complex(cp, d).complex;
  const int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
  std::vector<RMatrix> maps;
  for (int k = lo; k <= hi; ++k) {
    auto sb = hom_blocks(c, d, k), tb = hom_blocks(cp, d, k);
    RMatrix m = zeros(total(tb), total(sb));
    for (const auto& b : sb)
      if (const Block* tt = find_block(tb, b.i))
        paste(m, kron(transpose(t.at(b.i)), identity(d.at(b.i + k).generators())), tt->offset, b.offset);
    maps.push_back(std::move(m));
  }
  return ComplexMorphism(std::move(src), std::move(tgt), lo, std::move(maps));
}

ComplexMorphism hom_postcompose(const Complex& c, const ComplexMorphism& s) {
  if (!c.is_free()) throw std::invalid_argument("hom_postcompose needs a free source");
  Complex src = hom_complex(c, s.source()).complex;
  Complex tgt = hom_complex(c, s.target()).complex;
  const int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
  std::vector<RMatrix> maps;
  for (int k = lo; k <= hi; ++k) {
    auto sb = hom_blocks(c, s.source(), k), tb = hom_blocks(c, s.target(), k);
    RMatrix m = zeros(total(tb), total(sb));
    for (const auto& b : sb)
      if (const Block* tt = find_block(tb, b.i))
        paste(m, kron(identity(c.at(b.i).generators()), s.at(b.i + k)), tt->offset, b.offset);
    maps.push_back(std::move(m));
  }
  return ComplexMorphism(std::move(src), std::move(tgt), lo, std::move(maps));
}

Complex shift(const Complex& c, int k) {
  std::vector<FpModule> mods;
  std::vector<RMatrix> diffs;
  for (int q = c.lo(); q <= c.hi(); ++q) mods.push_back(c.at(q));
  for (int q = c.lo(); q < c.hi(); ++q) diffs.push_back(scale(sign(k), c.d(q)));
  return Complex(c.ring(), c.lo() - k, std::move(mods), std::move(diffs));
}

Complex cone(const ComplexMorphism& f) {
  const Complex& c = f.source();
  const Complex& d = f.target();
  const RingPtr& ring = c.ring();
  const int lo = std::min(c.lo() - 1, d.lo()), hi = std::max(c.hi() - 1, d.hi());
  std::vector<FpModule> mods;
  for (int k = lo; k <= hi; ++k) mods.push_back(direct_sum({c.at(k + 1), d.at(k)}));
  std::vector<RMatrix> diffs;
  for (int k = lo; k < hi; ++k) {
    const std::size_t cs = c.at(k + 1).generators(), ds = d.at(k).generators();
    const std::size_t ct = c.at(k + 2).generators(), dt = d.at(k + 1).generators();
    RMatrix m = zeros(ct + dt, cs + ds);
    paste(m, scale(Elem(-1), c.d(k + 1)), 0, 0);
    paste(m, f.at(k + 1), ct, 0);
    paste(m, d.d(k), ct, cs);
    diffs.push_back(std::move(m));
  }
  return Complex(ring, lo, std::move(mods), std::move(diffs));
}

QuasiIsoVerdict is_quasi_iso(const ComplexMorphism& f) {
  Complex k = cone(f);
  QuasiIsoVerdict v;
  for (int q = k.lo(); q <= k.hi(); ++q) {
    bool z = is_zero(cohomology(k, q).module);
    v.degrees.emplace_back(q, z);
    v.quasi_isomorphism = v.quasi_isomorphism && z;
  }
  return v;
}

std::uint64_t ComplexAudit::checked() { return g_checked.load(); }
std::uint64_t ComplexAudit::failures() { return g_failures.load(); }
void ComplexAudit::reset() {
  g_checked.store(0);
  g_failures.store(0);
}

}  // namespace wpr
