#include <doctest.h>

#include "generators.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/scalar.hpp"

using namespace superrtt;
using superrtt::testing::Gen;

namespace {

const Poly P = Poly::variable(Var::p);
const Poly Q = Poly::variable(Var::q);

Scalar rat(Poly num, Poly den = Poly(1)) { return Scalar(RatFunc(std::move(num), std::move(den))); }

}  // namespace

TEST_CASE("polynomial gcd and exact division") {
  Poly a = (P - 1) * (Q + 2) * (P + Q);
  Poly b = (P - 1) * (P + Q) * (Q - 3);
  CHECK(Poly::gcd(a, b) == ((P - 1) * (P + Q)).monic());
  CHECK(Poly::gcd(P * P - 1, P - 1) == P - 1);
  CHECK(Poly::gcd(Q * Q, P) == Poly(1));
  CHECK(Poly::gcd(Poly(), Q * Poly(3)) == Q);
  CHECK(Poly::exact_divide(a, P + Q) == (P - 1) * (Q + 2));
  CHECK_THROWS_AS(Poly::exact_divide(P, Q), std::domain_error);
}

TEST_CASE("rational functions are canonical") {
  RatFunc r(P * P - 1, 2 * (P - 1));
  CHECK(r == RatFunc((P + 1) * Rational(1, 2)));
  CHECK(RatFunc(P - 1, P - 1).is_one());
  CHECK(RatFunc(-P, -Q) == RatFunc(P, Q));
  CHECK(RatFunc(P, 2 * Q).denominator().leading_coefficient() == 1);
}

TEST_CASE("scalar_add") {
  const Scalar h1 = Scalar::h1();
  const Scalar h2 = Scalar::h2();
  Scalar s = h1 + h2;
  CHECK(s.component(kH1).is_one());
  CHECK(s.component(kH2).is_one());
  CHECK(s.component(kOne).is_zero());
  CHECK((h1 + (-h1)).is_zero());

  // Cross-multiplied by hand: (q - 1 + p - 1) / ((p - 1)(q - 1)).
  Scalar sum = rat(1, P - 1) + rat(1, Q - 1);
  CHECK(sum == rat(P + Q - 2, (P - 1) * (Q - 1)));
  CHECK(sum.is_body_only());
}

TEST_CASE("scalar_mul follows the exterior rules") {
  const Scalar h1 = Scalar::h1();
  const Scalar h2 = Scalar::h2();
  CHECK((h1 * h1).is_zero());
  CHECK((h2 * h2).is_zero());
  CHECK((h2 * h1) == Scalar(kH1H2, RatFunc(-1)));
  CHECK((h1 * h2) == Scalar(kH1H2, RatFunc(1)));
  CHECK(((h1 * rat(1, P - 1)) * rat(P - 1)) == h1);
}

TEST_CASE("limit_at") {
  CHECK(limit_at(rat(P - 1, P - 1), Var::p, 1).is_one());
  Scalar s = (Scalar::h1() * rat(1, P - 1)) * rat(P - 1) * Scalar::q();
  CHECK(limit_at(s, Var::p, 1) == Scalar::h1() * Scalar::q());
  CHECK_THROWS_AS(limit_at(rat(1, P - 1), Var::p, 1), PoleError);
  // A pole in p is no obstacle to evaluating q.
  CHECK(limit_at(rat(Q, P - 1), Var::q, 1) == rat(1, P - 1));
}

TEST_CASE("parity_split") {
  auto [e1, o1] = (Scalar(3) + Scalar::h1()).parity_split();
  CHECK(e1 == Scalar(3));
  CHECK(o1 == Scalar::h1());

  const Scalar h1h2 = Scalar::h1() * Scalar::h2();
  auto [e2, o2] = h1h2.parity_split();
  CHECK(e2 == h1h2);
  CHECK(o2.is_zero());

  const Scalar odd = Scalar::h1() * rat(1, P - 1);
  auto [e3, o3] = (odd + 5 * Scalar::q()).parity_split();
  CHECK(e3 == Scalar(5) * Scalar::q());
  CHECK(o3 == odd);
}

TEST_CASE("inverse of scalars with invertible body") {
  Scalar s = Scalar(2) + Scalar::h1() + Scalar::h1() * Scalar::h2() * Scalar::p();
  CHECK((s * s.inverse()).is_one());
  CHECK((s.inverse() * s).is_one());
}

TEST_CASE("property: ring axioms and supercommutativity on 1000 random scalars") {
  Gen gen(20260101);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = gen.scalar();
    const Scalar b = gen.scalar();
    const Scalar c = gen.scalar();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE((a - a).is_zero());

    const int pa = gen.integer(0, 1);
    const int pb = gen.integer(0, 1);
    const Scalar s = gen.homogeneous_scalar(pa);
    const Scalar t = gen.homogeneous_scalar(pb);
    const Scalar sign = (pa & pb) ? Scalar(-1) : Scalar(1);
    REQUIRE(s * t == sign * (t * s));

    auto [ev, od] = a.parity_split();
    REQUIRE(ev + od == a);
  }
}

TEST_CASE("property: odd scalars are nilpotent") {
  Gen gen(7);
  for (int i = 0; i < 1000; ++i) {
    const Scalar s = gen.odd_scalar();
    const Scalar sq = s * s;
    REQUIRE(sq.component(kH1).is_zero());
    REQUIRE(sq.component(kH2).is_zero());
    REQUIRE((s * gen.odd_scalar() * gen.odd_scalar()).is_zero());
  }
}

TEST_CASE("property: limits are multiplicative where defined") {
  Gen gen(99);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Scalar s = gen.scalar();
    const Scalar t = gen.scalar();
    const Var v = gen.coin() ? Var::p : Var::q;
    try {
      const Scalar ls = limit_at(s, v, 1);
      const Scalar lt = limit_at(t, v, 1);
      REQUIRE(limit_at(s * t, v, 1) == ls * lt);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  CHECK(checked > 300);
}
