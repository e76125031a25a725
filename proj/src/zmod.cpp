#include "wpr/zmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpr {
namespace {

void require_prime(long p) {
  if (!is_prime(static_cast<std::int64_t>(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_positive(const Integer& n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

unsigned vp(const Integer& n, long p) { return valuation(n, Integer(p)); }

bool divides_any(const Integer& n, long p) { return n % p == 0; }

}  // namespace

ZSummand ZSummand::cyclic(long p, unsigned k) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("cyclic summand needs exponent >= 1");
  return {Kind::Cyclic, p, k, {}};
}

ZSummand ZSummand::prufer(long p) {
  require_prime(p);
  return {Kind::Prufer, p, 0, {}};
}

ZSummand ZSummand::localized(std::vector<long> primes) {
  if (primes.empty()) throw std::invalid_argument("Z[1/S] needs a nonempty set S");
  for (long p : primes) require_prime(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {Kind::Localized, 0, 0, std::move(primes)};
}

std::string ZSummand::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Cyclic: return "Z/" + std::to_string(prime) + (exponent > 1 ? "^" + std::to_string(exponent) : "");
    case Kind::Prufer: return "Z(" + std::to_string(prime) + "^oo)";
    case Kind::Localized: {
      std::string s = "Z[1/";
      for (std::size_t i = 0; i < inverted.size(); ++i) s += (i ? "," : "") + std::to_string(inverted[i]);
      return s + "]";
    }
  }
  return {};
}

void ZModClass::add(const ZSummand& s, unsigned multiplicity) {
  if (multiplicity) parts_[s] += multiplicity;
}

bool ZModClass::is_injective() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const auto& kv) {
    return kv.first.kind == ZSummand::Kind::Rationals || kv.first.kind == ZSummand::Kind::Prufer;
  });
}

std::string ZModClass::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [summand, mult] : parts_) {
    if (!s.empty()) s += " + ";
    s += (mult > 1 ? std::to_string(mult) + "*" : "") + summand.to_string();
  }
  return s;
}

ZModClass cyclic_class(const Integer& n) {
  require_positive(n);
  ZModClass out;
  for (const auto& [p, e] : factorize(n)) out.add(ZSummand::cyclic(p.get_si(), e));
  return out;
}

std::vector<Integer> elementary_divisors(const ZModClass& d) {
  std::vector<Integer> out;
  for (const auto& [s, mult] : d.summands()) {
    if (s.kind != ZSummand::Kind::Cyclic) throw std::invalid_argument("class is not finite");
    for (unsigned k = 0; k < mult; ++k) out.push_back(pow(Integer(s.prime), s.exponent));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZModClass zmod_gamma(const Integer& n, const ZModClass& d) {
  require_positive(n);
  ZModClass out;
  for (const auto& [s, mult] : d.summands())
    if ((s.kind == ZSummand::Kind::Cyclic || s.kind == ZSummand::Kind::Prufer) && divides_any(n, s.prime))
      out.add(s, mult);
  return out;
}

ZModClass zmod_hom(const Integer& n, const ZModClass& d) {
  require_positive(n);
  ZModClass out;
  for (const auto& [s, mult] : d.summands()) {
    if (s.kind == ZSummand::Kind::Cyclic) {
      unsigned k = std::min(vp(n, s.prime), s.exponent);
      if (k) out.add(ZSummand::cyclic(s.prime, k), mult);
    } else if (s.kind == ZSummand::Kind::Prufer) {
      unsigned k = vp(n, s.prime);
      if (k) out.add(ZSummand::cyclic(s.prime, k), mult);
    }
  }
  return out;
}

ZModClass zmod_ext(const Integer& n, const ZModClass& d) {
  require_positive(n);
  ZModClass out;
  for (const auto& [s, mult] : d.summands()) {
    switch (s.kind) {
      case ZSummand::Kind::Integers: {
        const ZModClass c = cyclic_class(n);
        for (const auto& [part, m] : c.summands()) out.add(part, m * mult);
        break;
      }
      case ZSummand::Kind::Localized: {
        Integer rest = n;
        for (long p : s.inverted)
          while (rest % p == 0) rest /= p;
        const ZModClass c = cyclic_class(rest);
        for (const auto& [part, m] : c.summands()) out.add(part, m * mult);
        break;
      }
      case ZSummand::Kind::Cyclic: {
        unsigned k = std::min(vp(n, s.prime), s.exponent);
        if (k) out.add(ZSummand::cyclic(s.prime, k), mult);
        break;
      }
      case ZSummand::Kind::Rationals:
      case ZSummand::Kind::Prufer: break;
    }
  }
  return out;
}

ZModClass zmod_localize(const ZModClass& d, long p) {
  require_prime(p);
  ZModClass out;
  for (const auto& [s, mult] : d.summands()) {
    switch (s.kind) {
      case ZSummand::Kind::Integers: out.add(ZSummand::localized({p}), mult); break;
      case ZSummand::Kind::Localized: {
        std::vector<long> primes = s.inverted;
        primes.push_back(p);
        out.add(ZSummand::localized(primes), mult);
        break;
      }
      case ZSummand::Kind::Rationals: out.add(s, mult); break;
      case ZSummand::Kind::Cyclic:
      case ZSummand::Kind::Prufer:
        if (s.prime != p) out.add(s, mult);
        break;
    }
  }
  return out;
}

StabilityVerdict weak_stability_check(long p, std::size_t depth, const std::vector<ZModClass>& injectives) {
  require_prime(p);
  StabilityVerdict v;
  for (const auto& i : injectives) {
    if (!i.is_injective()) throw std::invalid_argument("test module " + i.to_string() + " is not injective");
    StabilityEntry e;
    e.module = i;
    e.torsion = zmod_gamma(Integer(p), i);
    e.pass = true;
    for (std::size_t k = 1; k <= depth; ++k) {
      e.ext_levels.push_back(zmod_ext(pow(Integer(p), k), e.torsion));
      e.pass = e.pass && e.ext_levels.back().is_zero();
    }
    v.pass = v.pass && e.pass;
    v.entries.push_back(std::move(e));
  }
  return v;
}

Thm45Verdict thm45_injective_test(long p, const ZModClass& injective, std::size_t depth) {
  require_prime(p);
  if (!injective.is_injective()) throw std::invalid_argument("test module " + injective.to_string() + " is not injective");
  Thm45Verdict v;
  for (std::size_t k = 1; k <= depth; ++k) {
    v.h0_levels.push_back(zmod_hom(pow(Integer(p), k), injective));
    v.h1_levels.push_back(zmod_ext(pow(Integer(p), k), injective));
  }
  // I -> I[1/p] summandwise: an isomorphism on Q and Z(q^oo) for q != p,
  // zero on Z(p^oo). H^0 collects the killed summands, H^1 whatever of
  // I[1/p] is not hit.
  std::map<ZSummand, unsigned> uncovered = zmod_localize(injective, p).summands();
  for (const auto& [s, mult] : injective.summands()) {
    if (s.kind == ZSummand::Kind::Prufer && s.prime == p) {
      v.h0_limit.add(s, mult);
      continue;
    }
    auto it = uncovered.find(s);
    if (it == uncovered.end() || it->second < mult) throw std::logic_error("localization lost a summand");
    it->second -= mult;
  }
  for (const auto& [s, mult] : uncovered) v.h1_limit.add(s, mult);
  v.pass = v.h1_limit.is_zero();
  for (const auto& h : v.h1_levels) v.pass = v.pass && h.is_zero();
  return v;
}

}  // namespace wpr
