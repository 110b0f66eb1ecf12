#pragma once

// Random instances for property tests. Fixed seeds keep runs reproducible.

#include <random>
#include <vector>

#include "superrtt/algebra.hpp"

namespace superrtt::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Poly poly(int max_deg = 2, int max_terms = 3) {
    Poly r;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) {
      Exponents e{integer(0, max_deg), integer(0, max_deg)};
      r += Poly::monomial(e, Rational(integer(-4, 4), integer(1, 3)));
    }
    return r;
  }

  RatFunc ratfunc() {
    static const std::vector<Poly> dens = {
        Poly(1),
        Poly::variable(Var::p) - Poly(1),
        Poly::variable(Var::q) - Poly(1),
        Poly::variable(Var::p),
        Poly::variable(Var::p) + Poly::variable(Var::q),
        Poly::variable(Var::q) * Poly::variable(Var::q) + Poly(1),
    };
    Poly num = poly();
    const Poly& den = dens[integer(0, static_cast<int>(dens.size()) - 1)];
    return RatFunc(num, den);
  }

  Scalar scalar() {
    Scalar s;
    for (int b = 0; b < kGrassmannDim; ++b) {
      if (integer(0, 2) > 0) s.component(b) = ratfunc();
    }
    return s;
  }

  /// Scalar of one Grassmann parity.
  Scalar homogeneous_scalar(int parity) {
    Scalar s;
    for (int b = 0; b < kGrassmannDim; ++b) {
      if (grassmann_parity(b) == parity && integer(0, 2) > 0) s.component(b) = ratfunc();
    }
    return s;
  }

  Scalar odd_scalar() { return homogeneous_scalar(1); }

  Scalar simple_scalar() {
    Scalar s;
    for (int b = 0; b < kGrassmannDim; ++b) {
      if (integer(0, 2) == 0) s.component(b) = RatFunc(Rational(integer(-3, 3)));
    }
    return s;
  }

  Word word(const Alphabet& a, int max_len) {
    Word w;
    const int n = integer(0, max_len);
    for (int i = 0; i < n; ++i) {
      std::size_t g = static_cast<std::size_t>(integer(0, static_cast<int>(a.size()) - 1));
      w.push_back(make_letter(g, a[g].parity));
    }
    return w;
  }

  Element element(const Alphabet& a, int max_terms = 3, int max_len = 3) {
    Element e;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) e.add_term(word(a, max_len), simple_scalar());
    return e;
  }

  /// Element whose every term has total parity `parity`.
  Element homogeneous_element(const Alphabet& a, int parity, int max_terms = 3, int max_len = 3) {
    Element e;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) {
      Word w = word(a, max_len);
      Scalar s;
      for (int b = 0; b < kGrassmannDim; ++b) {
        if ((grassmann_parity(b) ^ word_parity(w)) == parity && integer(0, 1) == 1) {
          s.component(b) = RatFunc(Rational(integer(-3, 3)));
        }
      }
      e.add_term(w, s);
    }
    return e;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace superrtt::testing
