#include "superrtt/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace superrtt {

namespace {

constexpr const char* kVarNames[kNumVars] = {"p", "q"};

int idx(Var v) { return static_cast<int>(v); }

Rational pow_rational(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Recursive GCD over Q[x_v, ..., x_last]; variables before v are absent.
Poly gcd_from(const Poly& a, const Poly& b, int v);

Poly content(const Poly& a, int v) {
  const Var var = static_cast<Var>(v);
  Poly g;
  for (int k = a.degree(var); k >= 0; --k) {
    Poly c = a.coefficient(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_from(g, c, v + 1);
    if (g.is_constant()) return Poly(1);
  }
  return g.is_zero() ? Poly(1) : g;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  const Var var = static_cast<Var>(v);
  const int n = b.degree(var);
  const Poly lb = b.leading_in(var);
  Poly r = a;
  while (!r.is_zero() && r.degree(var) >= n) {
    const int k = r.degree(var);
    const Poly lr = r.leading_in(var);
    r = lb * r - lr * Poly::variable(var, k - n) * b;
  }
  return r;
}

Poly gcd_from(const Poly& a, const Poly& b, int v) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (v >= kNumVars) return Poly(1);
  const Var var = static_cast<Var>(v);
  if (a.degree(var) == 0 && b.degree(var) == 0) return gcd_from(a, b, v + 1);

  if (v == kNumVars - 1) {
    // Univariate over Q: monic Euclid keeps coefficients small.
    Poly x = a.monic();
    Poly y = b.monic();
    if (x.degree(var) < y.degree(var)) std::swap(x, y);
    while (!y.is_zero()) {
      Poly r = pseudo_remainder(x, y, v).monic();
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }

  const Poly ca = content(a, v);
  const Poly cb = content(b, v);
  Poly x = Poly::exact_divide(a, ca);
  Poly y = Poly::exact_divide(b, cb);
  if (x.degree(var) < y.degree(var)) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : Poly::exact_divide(r, content(r, v)).monic();
  }
  // x is primitive in var; a v-free primitive polynomial is a unit.
  Poly g = x.degree(var) == 0 ? Poly(1) : x;
  return (gcd_from(ca, cb, v + 1) * g).monic();
}

}  // namespace

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Exponents{0, 0}, Rational(value));
}

Poly::Poly(const Rational& value) {
  if (value != 0) {
    Rational v = value;
    v.canonicalize();
    terms_.emplace(Exponents{0, 0}, v);
  }
}

Poly Poly::variable(Var v, int exponent) {
  Exponents e{0, 0};
  e[idx(v)] = exponent;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
  Poly r;
  Rational v = c;
  v.canonicalize();
  r.add_term(e, v);
  return r;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents{0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
         terms_.begin()->second == 1;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return d;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

Poly Poly::coefficient(Var v, int k) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != k) continue;
    Exponents f = e;
    f[idx(v)] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(Exponents{ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::evaluate(Var v, const Rational& value) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(v)] = 0;
    r.add_term(f, c * pow_rational(value, e[idx(v)]));
  }
  return r;
}

Poly Poly::exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  Poly quotient;
  Poly rem = a;
  const auto& [lb_exp, lb_coeff] = *b.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [lr_exp, lr_coeff] = *rem.terms_.begin();
    Exponents e{lr_exp[0] - lb_exp[0], lr_exp[1] - lb_exp[1]};
    if (e[0] < 0 || e[1] < 0) throw std::domain_error("polynomial division is not exact");
    Poly t = monomial(e, lr_coeff / lb_coeff);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

Poly Poly::gcd(const Poly& a, const Poly& b) { return gcd_from(a, b, 0); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_unit_monomial = e[0] == 0 && e[1] == 0;
    bool need_star = false;
    if (mag != 1 || is_unit_monomial) {
      out << mag.get_str();
      need_star = true;
    }
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (need_star) out << "*";
      out << kVarNames[v];
      if (e[v] != 1) out << "^" << e[v];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace superrtt
