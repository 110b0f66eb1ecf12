#include "superrtt/scalar.hpp"

#include <vector>

#include "superrtt/format.hpp"

namespace superrtt {

namespace {

// Sign of reordering basis word a.b into sorted order; 0 if a generator repeats.
int exterior_sign(int a, int b) {
  if (a & b) return 0;
  return ((a & kH2) && (b & kH1)) ? -1 : 1;
}

const char* basis_name(int basis) {
  switch (basis) {
    case kH1: return "h1";
    case kH2: return "h2";
    case kH1H2: return "h1*h2";
    default: return "";
  }
}

}  // namespace

bool Scalar::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Scalar::is_one() const { return c_[kOne].is_one() && is_body_only(); }

bool Scalar::is_body_only() const {
  return c_[kH1].is_zero() && c_[kH2].is_zero() && c_[kH1H2].is_zero();
}

int Scalar::min_degree() const {
  int best = -1;
  for (int b = 0; b < kGrassmannDim; ++b) {
    if (c_[b].is_zero()) continue;
    int d = grassmann_degree(b);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int Scalar::parity() const {
  bool has_even = !c_[kOne].is_zero() || !c_[kH1H2].is_zero();
  bool has_odd = !c_[kH1].is_zero() || !c_[kH2].is_zero();
  if (has_even && has_odd) return -1;
  return has_odd ? 1 : 0;
}

Scalar Scalar::even_part() const {
  Scalar r;
  r.c_[kOne] = c_[kOne];
  r.c_[kH1H2] = c_[kH1H2];
  return r;
}

Scalar Scalar::odd_part() const {
  Scalar r;
  r.c_[kH1] = c_[kH1];
  r.c_[kH2] = c_[kH2];
  return r;
}

Scalar Scalar::crossed(int parity) const {
  if ((parity & 1) == 0) return *this;
  Scalar r = *this;
  r.c_[kH1] = -r.c_[kH1];
  r.c_[kH2] = -r.c_[kH2];
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int b = 0; b < kGrassmannDim; ++b) c_[b] += o.c_[b];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int b = 0; b < kGrassmannDim; ++b) c_[b] -= o.c_[b];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (int i = 0; i < kGrassmannDim; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < kGrassmannDim; ++j) {
      if (b.c_[j].is_zero()) continue;
      const int sign = exterior_sign(i, j);
      if (sign == 0) continue;
      RatFunc term = a.c_[i] * b.c_[j];
      if (sign < 0) r.c_[i | j] -= term;
      else r.c_[i | j] += term;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (c_[kOne].is_zero()) throw std::domain_error("scalar with zero body is not invertible");
  // s = b (1 + n) with n nilpotent, n^3 = 0.
  const Scalar body_inv(c_[kOne].inverse());
  Scalar n = body_inv * *this - Scalar(1);
  return (Scalar(1) - n + n * n) * body_inv;
}

Scalar Scalar::limit_at(Var v, const Rational& value) const {
  Scalar r;
  for (int b = 0; b < kGrassmannDim; ++b) {
    if (!c_[b].is_zero()) r.c_[b] = c_[b].evaluate(v, value);
  }
  return r;
}

Scalar Scalar::without_h1h2() const {
  Scalar r = *this;
  r.c_[kH1H2] = RatFunc();
  return r;
}

Scalar Scalar::specialize(bool h1_zero, bool h2_zero) const {
  Scalar r = *this;
  if (h1_zero) {
    r.c_[kH1] = RatFunc();
    r.c_[kH1H2] = RatFunc();
  }
  if (h2_zero) {
    r.c_[kH2] = RatFunc();
    r.c_[kH1H2] = RatFunc();
  }
  return r;
}

std::string Scalar::to_string() const {
  std::vector<TermText> terms;
  for (int b = 0; b < kGrassmannDim; ++b) {
    if (!c_[b].is_zero()) terms.push_back({c_[b], basis_name(b)});
  }
  return render_sum(terms);
}

Scalar limit_at(const Scalar& s, Var v, const Rational& value) { return s.limit_at(v, value); }

}  // namespace superrtt
