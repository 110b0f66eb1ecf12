#include <doctest.h>

#include "superrtt/builtins.hpp"
#include "superrtt/calculus.hpp"
#include "superrtt/parser.hpp"

using namespace superrtt;

namespace {

constexpr PresentationFlags kH1H2Zero{true};

Presentation from(const std::vector<std::string>& rels) {
  return presentation_from_text("hand", calculus_alphabet(), rels, kH1H2Zero);
}

Presentation derived(Family f) {
  return orient_relations("derived", calculus_alphabet(), expand_index_equation(f), kH1H2Zero);
}

}  // namespace

TEST_CASE("families that reproduce the stated relations") {
  for (Family f : {Family::coords, Family::duals, Family::deriv_coord, Family::deriv_dual, Family::mixed}) {
    const FamilyComparison c = compare_family(f);
    CHECK_MESSAGE(c.equal, family_name(f));
    CHECK_MESSAGE(c.report.passed, family_name(f));
  }
}

TEST_CASE("derivative relations from the index equation") {
  // Hand expansion of d_i d_j = Rhat^{lk}_{ji} d_k d_l with h1 h2 = 0:
  // i = x, j = xi gives dx dxi = dxi dx + h2 dx^2 (the stated sign is -h2).
  CHECK(derived(Family::deriv_deriv).same_rules(from({"dx*dxi - dxi*dx - h2*dx^2", "dxi^2 - h2*dxi*dx"})));
  const FamilyComparison c = compare_family(Family::deriv_deriv);
  CHECK(!c.equal);
}

TEST_CASE("derivative-coordinate relations, one entry by hand") {
  // j = i = x: dx x = 1 + Rhat^{1k}_{1l} x^l d_k.
  const Presentation p = derived(Family::deriv_coord);
  const Element got = normal_form(parse_element("dx*x", p.alphabet()), p);
  CHECK(got == parse_element("1 + x*dx + h1*x*dxi - h2*xi*dx", p.alphabet()));
}

TEST_CASE("undeformed calculus") {
  const Presentation p = builtin_presentation("calculus");
  const Presentation classical = specialize(p, true, true, "classical");
  const Alphabet& al = classical.alphabet();
  CHECK(normal_form(parse_element("dx*x", al), classical) == parse_element("1 + x*dx", al));
  CHECK(normal_form(parse_element("dxi*xi", al), classical) == parse_element("1 - xi*dxi", al));
  CHECK(normal_form(parse_element("dxi*dx", al), classical) == parse_element("dx*dxi", al));
}

TEST_CASE("consistency report") {
  const auto reports = calculus_consistency(3);
  REQUIRE(reports.size() == 4);
  CHECK(reports[2].passed);  // duals vs Lambda_h2
  CHECK(reports[3].passed);  // coordinate subalgebra vs A_h1
  // The stated coordinate and derivative relations have an obstruction that
  // no choice of the d d relations removes: d_xi xi^2 resolves two ways,
  // differing by 2 h1 x.
  bool found = false;
  for (const auto& r : reports[0].residues) {
    if (!r.zero && r.label.rfind("dxi*xi^2", 0) == 0) found = r.rendered == "-2*h1*x";
  }
  CHECK(found);
  CHECK(!reports[0].passed);
}
