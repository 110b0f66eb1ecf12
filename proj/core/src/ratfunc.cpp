#include "superrtt/ratfunc.hpp"

#include <stdexcept>

#include "superrtt/errors.hpp"

namespace superrtt {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::exact_divide(num_, g);
      den_ = Poly::exact_divide(den_, g);
    }
  }
  make_monic();
}

void RatFunc::make_monic() {
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  // Both operands are reduced, so only the common factor of the
  // denominators can cancel against the new numerator.
  const Poly g = Poly::gcd(den_, o.den_);
  const Poly b = Poly::exact_divide(den_, g);
  const Poly d = Poly::exact_divide(o.den_, g);
  num_ = num_ * d + o.num_ * b;
  den_ = b * o.den_;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  if (!g.is_constant()) {
    const Poly h = Poly::gcd(num_, g);
    if (!h.is_constant()) {
      num_ = Poly::exact_divide(num_, h);
      den_ = Poly::exact_divide(den_, h);
    }
  }
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cancel across the two fractions; each is already reduced.
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const Poly g = Poly::gcd(a, d);
    if (!g.is_constant()) {
      a = Poly::exact_divide(a, g);
      d = Poly::exact_divide(d, g);
    }
  }
  if (!b.is_constant()) {
    const Poly g = Poly::gcd(c, b);
    if (!g.is_constant()) {
      c = Poly::exact_divide(c, g);
      b = Poly::exact_divide(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  make_monic();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::evaluate(Var v, const Rational& value) const {
  Poly den = den_.evaluate(v, value);
  if (den.is_zero()) {
    throw PoleError("pole at " + std::string(v == Var::p ? "p" : "q") + " = " +
                    value.get_str() + " in " + to_string());
  }
  return RatFunc(num_.evaluate(v, value), std::move(den));
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const std::string num = num_.to_string();
  const std::string den = den_.to_string();
  const bool wrap_num = num_.size() > 1;
  const bool wrap_den = den_.size() > 1 || den.find('*') != std::string::npos;
  return (wrap_num ? "(" + num + ")" : num) + "/" + (wrap_den ? "(" + den + ")" : den);
}

}  // namespace superrtt
