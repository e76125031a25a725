#include "wpr/field.hpp"

#include <stdexcept>

namespace wpr {

Field Field::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime: " + to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Rational Field::normalize(const Rational& a) const {
  if (p_ == 0) {
    Rational r = a;
    r.canonicalize();
    return r;
  }
  Integer num = mod_floor(a.get_num(), p_);
  if (a.get_den() == 1) return Rational(num);
  Integer den = mod_floor(a.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
  return Rational(mod_floor(num * inv, p_));
}

Rational Field::inverse(const Rational& a) const {
  Rational n = normalize(a);
  if (n == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / n;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), n.get_num().get_mpz_t(), p_.get_mpz_t());
  return Rational(inv);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + to_string(p_) + ")"; }

}  // namespace wpr
