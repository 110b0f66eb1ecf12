#pragma once

#include <string>

#include "superrtt/polynomial.hpp"

namespace superrtt {

/// Element of Q(p, q) in canonical form.
///
/// Numerator and denominator are coprime and the denominator has lex-leading
/// coefficient 1, so equality is structural. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;

  /// Value at v = value; throws PoleError if the reduced denominator vanishes.
  RatFunc evaluate(Var v, const Rational& value) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void make_monic();

  Poly num_;
  Poly den_;
};

}  // namespace superrtt
