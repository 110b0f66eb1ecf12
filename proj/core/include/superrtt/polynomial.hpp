#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>

namespace superrtt {

/// Indeterminates of the ground field Q(p, q).
enum class Var : int { p = 0, q = 1 };

inline constexpr int kNumVars = 2;

using Rational = mpq_class;

/// Exponent vector (p-degree, q-degree).
using Exponents = std::array<int, kNumVars>;

/// Sparse polynomial in Q[p, q].
///
/// Terms are kept in lexicographic order with p > q, largest first, so
/// `leading()` is the lex-leading term. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Poly variable(Var v, int exponent = 1);
  static Poly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value; only meaningful when `is_constant()`.
  Rational constant_value() const;
  bool is_one() const;

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree(Var v) const;
  /// Lex-leading coefficient (rational).
  const Rational& leading_coefficient() const;

  /// Coefficient of v^k, as a polynomial free of v.
  Poly coefficient(Var v, int k) const;
  /// Coefficient of the highest power of v.
  Poly leading_in(Var v) const { return coefficient(v, degree(v)); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Substitute v = value.
  Poly evaluate(Var v, const Rational& value) const;

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  static Poly exact_divide(const Poly& a, const Poly& b);

  /// Greatest common divisor, normalised to lex-leading coefficient 1.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Scale so that the lex-leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

}  // namespace superrtt
