#include <doctest.h>

#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/hopf.hpp"
#include "superrtt/parser.hpp"

using namespace superrtt;

namespace {

Element el(std::string_view text, const Alphabet& a) { return parse_element(text, a); }

}  // namespace

TEST_CASE("coproduct of generators") {
  const Alphabet al = supergroup_alphabet();
  auto pure = [&](const char* l, const char* r) {
    return TensorElement::pure({el(l, al), el(r, al)});
  };
  CHECK(coproduct(el("a", al), al) == pure("a", "a") + pure("beta", "gamma"));
  CHECK(coproduct(el("beta", al), al) == pure("a", "beta") + pure("beta", "d"));
  CHECK(coproduct(el("gamma", al), al) == pure("gamma", "a") + pure("d", "gamma"));
  CHECK(coproduct(el("d", al), al) == pure("gamma", "beta") + pure("d", "d"));
  CHECK_THROWS_AS(coproduct(el("dinv", localized_alphabet()), localized_alphabet()), UnsupportedGenerator);
}

TEST_CASE("graded tensor product sign") {
  const Alphabet al = supergroup_alphabet();
  // (1 (x) beta)(gamma (x) 1) = -(gamma (x) beta)
  const TensorElement x = TensorElement::pure({Element(1), el("beta", al)});
  const TensorElement y = TensorElement::pure({el("gamma", al), Element(1)});
  CHECK(x * y == -TensorElement::pure({el("gamma", al), el("beta", al)}));
  CHECK(y * x == TensorElement::pure({el("gamma", al), el("beta", al)}));
}

TEST_CASE("counit") {
  const Alphabet al = supergroup_alphabet();
  CHECK(counit(el("a*d - beta*gamma", al), al) == Scalar(1));
  CHECK(counit(el("beta", al), al).is_zero());
  CHECK(counit(el("3*a^2 + h1*d", al), al) == Scalar(3) + Scalar::h1());
}

TEST_CASE("Hopf axioms") {
  CHECK(coproduct_homomorphism().passed);
  CHECK(counit_axioms().passed);
  CHECK(coassociativity().passed);
  CHECK(antipode_check().passed);
}

TEST_CASE("localization") {
  const Presentation& loc = builtin_presentation("GL_h1h2_loc");
  CHECK(normal_form(el("a*ainv", loc.alphabet()), loc) == Element(1));
  CHECK(normal_form(el("dinv*d", loc.alphabet()), loc) == Element(1));
  CHECK(confluence_check(loc, 3).passed);
}

TEST_CASE("inverse clearing") {
  const Alphabet la = localized_alphabet();
  CHECK(clear_inverses(el("dinv*d - 1", la)).is_zero());
  CHECK(clear_inverses(el("d*dinv*beta - beta", la)).is_zero());
  // d and beta do not commute in GL_h1h2, so neither do d^-1 and beta.
  CHECK(!clear_inverses(el("dinv*beta - beta*dinv", la)).is_zero());
  for (const auto& h : helper_relations()) {
    CHECK_MESSAGE(clear_inverses(parse_relation(h, la)).is_zero(), h);
  }
}

TEST_CASE("superdeterminant") {
  const Alphabet la = localized_alphabet();
  const Presentation& loc = builtin_presentation("GL_h1h2_loc");
  const Element D = superdet(la);
  CHECK(counit(D, la) == Scalar(1));
  for (const char* g : {"a", "beta", "gamma", "d"}) {
    const Element t = el(g, la);
    CHECK_MESSAGE(normal_form(D * t - t * D, loc).is_zero(), g);
  }
  for (const auto& r : superdet_suite()) CHECK_MESSAGE(r.passed, r.identity_name);
}
