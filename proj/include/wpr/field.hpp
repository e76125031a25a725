#pragma once

#include "wpr/integer.hpp"

#include <string>

namespace wpr {

/// Coefficient field: the rationals (characteristic 0) or F_p.
///
/// Elements are stored as `Rational`; over F_p they are kept as integers in
/// [0, p).
class Field {
 public:
  /// The rationals.
  Field() = default;
  /// F_p; throws std::invalid_argument unless p is prime.
  static Field prime(const Integer& p);
  static Field rationals() { return Field(); }

  const Integer& characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  Rational normalize(const Rational& a) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse(const Rational& a) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  Integer p_ = 0;
};

}  // namespace wpr
