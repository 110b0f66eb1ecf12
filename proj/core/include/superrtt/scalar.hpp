#pragma once

#include <array>
#include <string>
#include <utility>

#include "superrtt/ratfunc.hpp"

namespace superrtt {

/// Basis of the exterior algebra on the odd units h1, h2, as a bitmask.
enum GrassmannBasis : int { kOne = 0, kH1 = 1, kH2 = 2, kH1H2 = 3 };

inline constexpr int kGrassmannDim = 4;

inline constexpr int grassmann_degree(int basis) { return (basis & 1) + ((basis >> 1) & 1); }
inline constexpr int grassmann_parity(int basis) { return grassmann_degree(basis) & 1; }

/// Element of Q(p, q) tensor Lambda(h1, h2).
///
/// p and q are even and central. h1 h1 = h2 h2 = 0 and h1 h2 = -h2 h1 hold by
/// construction: components are indexed by sorted basis words.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) { c_[kOne] = RatFunc(v); }  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) { c_[kOne] = RatFunc(v); }  // NOLINT(google-explicit-constructor)
  Scalar(RatFunc v) { c_[kOne] = std::move(v); }  // NOLINT(google-explicit-constructor)
  Scalar(int basis, RatFunc coeff) { c_[basis] = std::move(coeff); }

  static Scalar h1() { return Scalar(kH1, RatFunc(1)); }
  static Scalar h2() { return Scalar(kH2, RatFunc(1)); }
  static Scalar p() { return Scalar(RatFunc::variable(Var::p)); }
  static Scalar q() { return Scalar(RatFunc::variable(Var::q)); }

  const RatFunc& component(int basis) const { return c_[basis]; }
  RatFunc& component(int basis) { return c_[basis]; }

  bool is_zero() const;
  bool is_one() const;
  /// Only the unit component may be nonzero.
  bool is_body_only() const;
  /// -1 if zero, otherwise the lowest Grassmann degree among nonzero components.
  int min_degree() const;
  /// 0 or 1 when homogeneous, -1 when mixed, 0 for zero.
  int parity() const;

  Scalar even_part() const;
  Scalar odd_part() const;
  std::pair<Scalar, Scalar> parity_split() const { return {even_part(), odd_part()}; }

  /// Value of this scalar after moving it to the right past something of
  /// parity `parity`: even + (-1)^parity odd.
  Scalar crossed(int parity) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }

  /// Inverse when the unit component is nonzero (the rest is nilpotent).
  Scalar inverse() const;

  /// Component-wise evaluation of the rational coefficients.
  Scalar limit_at(Var v, const Rational& value) const;
  /// Drop the h1 h2 component.
  Scalar without_h1h2() const;
  /// Substitute h1 -> 0 and/or h2 -> 0.
  Scalar specialize(bool h1_zero, bool h2_zero) const;

  std::string to_string() const;

 private:
  std::array<RatFunc, kGrassmannDim> c_;
};

Scalar limit_at(const Scalar& s, Var v, const Rational& value);

}  // namespace superrtt
