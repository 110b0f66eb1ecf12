#include <doctest.h>

#include "generators.hpp"
#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/presentation.hpp"

using namespace superrtt;
using superrtt::testing::Gen;

namespace {

Element el(std::string_view text, const Alphabet& a) { return parse_element(text, a); }

Element nf(std::string_view text, const Presentation& p) {
  return normal_form(parse_element(text, p.alphabet()), p);
}

}  // namespace

TEST_CASE("graded product moves scalars left with Koszul signs") {
  const Alphabet a = plane_alphabet();
  const Element xi = el("xi", a);
  const Element x = el("x", a);
  const Element h1 = Element(Scalar::h1());
  // xi * h1 = -h1 * xi; x * h1 = h1 * x.
  CHECK(xi * h1 == -(h1 * xi));
  CHECK(x * h1 == h1 * x);
  CHECK((xi * xi).size() == 1);
  CHECK(el("xi*h1*xi", a) == -(h1 * (xi * xi)));
}

TEST_CASE("words are ordered degree first, then lexicographically") {
  const Alphabet a = supergroup_alphabet();
  DegLex less;
  CHECK(less(a.word({"d"}), a.word({"a", "a"})));
  CHECK(less(a.word({"a", "d"}), a.word({"d", "a"})));
  CHECK(!less(a.word({"beta"}), a.word({"beta"})));
}

TEST_CASE("normal forms in A_h1") {
  const Presentation& p = builtin_presentation("A_h1");
  CHECK(nf("xi*x", p).render(p.alphabet()) == "x*xi - h1*x^2");
  CHECK(nf("x", p).render(p.alphabet()) == "x");
  CHECK(nf("xi^2 + h1*x*xi", p).is_zero());
  // Hand reduction: xi (xi x) = -h1 x^2 xi.
  CHECK(nf("xi*xi*x", p) == el("-h1*x^2*xi", p.alphabet()));
}

TEST_CASE("normal forms in GL_h1h2") {
  const Presentation& p = builtin_presentation("GL_h1h2");
  CHECK(nf("beta*gamma + gamma*beta - (h1*beta - h2*gamma)*(d - a)", p).is_zero());
  CHECK(nf("a*beta - beta*a + h2*(a^2 - beta*gamma - a*d)", p).is_zero());
  CHECK(!nf("a*beta - beta*a", p).is_zero());
}

TEST_CASE("GL_pq orients with invertible leading coefficients") {
  const Presentation& p = builtin_presentation("GL_pq");
  CHECK(p.rules().size() == 8);
  // beta a = q^-1 a beta
  CHECK(nf("beta*a", p) == el("q^-1*a*beta", p.alphabet()));
  CHECK(nf("a*d - d*a - (p - q^-1)*gamma*beta", p).is_zero());
}

TEST_CASE("the rewriting step bound raises NonTerminating") {
  const Alphabet a = plane_alphabet();
  // x -> x + x*x never terminates.
  std::vector<Rule> rules{{a.word({"x"}), el("x + x^2", a)}};
  Presentation p("loop", a, rules);
  Reducer r(p, 200);
  CHECK_THROWS_AS(r.reduce(el("x", a)), NonTerminating);
}

TEST_CASE("parser reports offsets and round-trips canonical text") {
  CHECK_THROWS_AS(parse_expression("x*"), SyntaxError);
  try {
    parse_expression("x*");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  const ExprPtr e = parse_expression("x*xi - xi*x - h1*x^2");
  REQUIRE(e->kind == Expr::Kind::sum);
  CHECK(e->children.size() == 3);
  const ExprPtr f = parse_expression("a*d - d*a - (h1*beta + h2*gamma)*(a - d)");
  CHECK(*parse_expression(to_string(*f)) == *f);
  CHECK(canonical_identifier("ξ") == "xi");
  CHECK(parse_element("ξ*x", plane_alphabet()) == parse_element("xi*x", plane_alphabet()));
  CHECK_THROWS_AS(parse_element("zeta", plane_alphabet()), Error);
}

TEST_CASE("property: multiplication is associative (1000 triples)") {
  Gen gen(11);
  const Alphabet a = supergroup_alphabet();
  for (int i = 0; i < 1000; ++i) {
    const Element x = gen.element(a);
    const Element y = gen.element(a);
    const Element z = gen.element(a);
    REQUIRE((x * y) * z == x * (y * z));
  }
}

TEST_CASE("property: normal_form is idempotent (1000 elements per presentation)") {
  Gen gen(12);
  for (const char* name : {"A_h1", "GL_h1h2", "GL_pq"}) {
    const Presentation& p = builtin_presentation(name);
    Reducer r(p);
    for (int i = 0; i < 1000; ++i) {
      const Element e = gen.element(p.alphabet(), 3, 4);
      const Element once = r.reduce(e);
      REQUIRE(r.reduce(once) == once);
    }
  }
}

TEST_CASE("property: normal_form respects products (1000 pairs)") {
  Gen gen(13);
  const Presentation& p = builtin_presentation("GL_h1h2");
  Reducer r(p);
  for (int i = 0; i < 1000; ++i) {
    const Element x = gen.element(p.alphabet(), 2, 3);
    const Element y = gen.element(p.alphabet(), 2, 3);
    REQUIRE(r.reduce(r.reduce(x) * r.reduce(y)) == r.reduce(x * y));
  }
}

TEST_CASE("property: reduction conserves parity (1000 homogeneous elements)") {
  Gen gen(14);
  for (const char* name : {"A_h1", "Astar_h2", "GL_h1h2"}) {
    const Presentation& p = builtin_presentation(name);
    Reducer r(p);
    for (int i = 0; i < 1000; ++i) {
      const int parity = gen.integer(0, 1);
      const Element e = gen.homogeneous_element(p.alphabet(), parity, 3, 4);
      const Element red = r.reduce(e);
      if (red.is_zero()) continue;
      REQUIRE(red.parity().has_value());
      REQUIRE(*red.parity() == parity);
    }
  }
}

TEST_CASE("property: rendering and parsing round-trip (1000 elements)") {
  Gen gen(15);
  const Alphabet a = calculus_alphabet();
  for (int i = 0; i < 1000; ++i) {
    const Element e = gen.element(a, 4, 3);
    const std::string text = e.render(a);
    REQUIRE(parse_element(text, a) == e);
    REQUIRE(to_string(*parse_expression(text)) == to_string(*parse_expression(
                                                       to_string(*parse_expression(text)))));
  }
}

TEST_CASE("every built-in rule is parity homogeneous") {
  for (const auto& name : builtin_names()) {
    const Presentation& p = builtin_presentation(name);
    for (const auto& rule : p.rules()) {
      const Element rel = Element(rule.lhs) - rule.rhs;
      CHECK_MESSAGE(rel.parity().has_value(), name);
    }
  }
}
