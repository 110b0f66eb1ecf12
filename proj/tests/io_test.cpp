#include <doctest.h>

#include <sstream>

#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/presentation_io.hpp"

using namespace superrtt;

TEST_CASE("every built-in presentation survives a text round trip") {
  for (const auto& name : builtin_names()) {
    const Presentation& p = builtin_presentation(name);
    std::stringstream s;
    write_presentation(s, p);
    const Presentation back = read_presentation(s);
    CHECK_MESSAGE(back.same_rules(p), name);
    CHECK(back.name() == p.name());
  }
}

TEST_CASE("relations in a file are oriented") {
  std::istringstream in(
      "# the Jordan plane\n"
      "name jordan\n"
      "generators x:even xi:odd\n"
      "relation x*xi - xi*x - h1*x^2\n"
      "relation xi^2 + h1*x*xi\n");
  const Presentation p = read_presentation(in);
  CHECK(p.name() == "jordan");
  CHECK(p.same_rules(builtin_presentation("A_h1")));
}

TEST_CASE("malformed files") {
  std::istringstream bad_directive("name x\nfoo bar\n");
  CHECK_THROWS_AS(read_presentation(bad_directive), SyntaxError);
  std::istringstream bad_expr("generators x:even\nrelation x*\n");
  CHECK_THROWS_AS(read_presentation(bad_expr), SyntaxError);
  CHECK_THROWS_AS(load_presentation("no_such_thing"), UnknownPresentation);
}

TEST_CASE("matrix literals") {
  const GradedMatrix m = parse_matrix_literal("[[1, 0], [h1/(p-1), 1]]");
  CHECK(m.rows() == 2);
  CHECK(m.scalar_at(1, 0) == Scalar::h1() * Scalar(RatFunc(Poly(1), Poly::variable(Var::p) - Poly(1))));
  CHECK_THROWS_AS(parse_matrix_literal("[[1, 0], [1]]"), Error);
}
