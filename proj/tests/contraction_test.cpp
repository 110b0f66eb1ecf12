#include <doctest.h>

#include "superrtt/builtins.hpp"
#include "superrtt/contraction.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/presentation_io.hpp"

using namespace superrtt;

TEST_CASE("contraction matrices are exact inverses") {
  for (const ContractionMatrix& c : {g_h1(), g_h2(), g_h1h2(), g_identity()}) {
    CHECK(c.g * c.g_inv == GradedMatrix::identity(grades_1_1()));
    CHECK(c.g_inv * c.g == GradedMatrix::identity(grades_1_1()));
  }
  const ContractionMatrix lit = contraction_matrix("lit", parse_matrix_literal("[[1, 0], [h1/(p-1), 1]]"));
  CHECK(lit.g == g_h1().g);
  CHECK(lit.g_inv == g_h1().g_inv);
}

TEST_CASE("plane contractions") {
  const Presentation a = contract_plane(builtin_presentation("A_p"), g_h1(), {"x", "xi"}, Var::p, "A");
  // By hand: x (f1 x + xi) = p (f1 x + xi) x gives x xi = p xi x + h1 x^2.
  const Presentation hand =
      presentation_from_text("hand", plane_alphabet(), {"x*xi - xi*x - h1*x^2", "xi^2 + h1*x*xi"});
  CHECK(a.same_rules(hand));
  CHECK(contract_plane(builtin_presentation("Astar_q"), g_h2(), {"eta", "y"}, Var::q, "B")
            .same_rules(builtin_presentation("Astar_h2")));
  CHECK(contract_plane(builtin_presentation("Lambda_q"), g_h2(), {"phi", "u"}, Var::q, "C")
            .same_rules(builtin_presentation("Lambda_h2")));
  // Without the singular transformation the limit is the undeformed plane.
  const Presentation classical =
      contract_plane(builtin_presentation("A_p"), g_identity(), {"x", "xi"}, Var::p, "D");
  CHECK(classical.same_rules(presentation_from_text("cl", plane_alphabet(), {"x*xi - xi*x", "xi^2"})));
}

TEST_CASE("supergroup contraction") {
  CHECK(ideals_equal(contract_supergroup(), builtin_presentation("GL_h1h2"), 4));
  SupergroupOptions q_first;
  q_first.q_first = true;
  CHECK(ideals_equal(contract_supergroup(q_first), builtin_presentation("GL_h1h2"), 4));
  SupergroupOptions h2_zero;
  h2_zero.h2_zero = true;
  CHECK(ideals_equal(contract_supergroup(h2_zero), builtin_presentation("GL_h1"), 4));
  CHECK(!ideals_equal(contract_supergroup(h2_zero), builtin_presentation("GL_h1h2"), 2));
}

TEST_CASE("R-matrix contraction") {
  CHECK(contract_rmatrix() == r_h1h2());
  RMatrixOptions p_first;
  p_first.p_first = true;
  CHECK(contract_rmatrix(p_first) == r_h1h2());
  RMatrixOptions h2_zero;
  h2_zero.h2_zero = true;
  CHECK(contract_rmatrix(h2_zero) == r_h1());
  RMatrixOptions both;
  both.h1_zero = both.h2_zero = true;
  CHECK(contract_rmatrix(both) == GradedMatrix::identity(tensor_grades(2)));
  RMatrixOptions plain;
  plain.signs = KroneckerSigns::ungraded;
  CHECK_THROWS_AS(contract_rmatrix(plain), PoleError);
}

TEST_CASE("conjugated generators") {
  const Alphabet al = supergroup_alphabet();
  const GradedMatrix t = conjugated_generators(g_identity(), al);
  CHECK(t.at(0, 0) == Element(al.word({"a"})));
  CHECK(t.at(1, 1) == Element(al.word({"d"})));
  // With g_h1: T' = g T g^{-1}, top-left entry a - beta f1.
  const GradedMatrix t1 = conjugated_generators(g_h1(), al);
  CHECK(t1.at(0, 1) == Element(al.word({"beta"})));
}
