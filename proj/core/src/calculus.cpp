#include "superrtt/calculus.hpp"

#include "superrtt/builtins.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/rmatrix.hpp"

namespace superrtt {

namespace {

constexpr PresentationFlags kFlags{true};

struct Names {
  const char* u[2] = {"x", "xi"};
  const char* v[2] = {"phi", "u"};
  const char* du[2] = {"dx", "dxi"};
  const char* dv[2] = {"dphi", "du"};
};

Element g(const Alphabet& al, const char* n) { return Element(Word(1, al.letter(n))); }

Scalar entry(const GradedMatrix& m, int i, int j, int k, int l) {
  return m.scalar_at(2 * i + j, 2 * k + l);
}

GradedMatrix rhat_of(const GradedMatrix& r) {
  return (permutation() * r).map([](const Element& e) { return e.without_h1h2(); });
}

const std::vector<std::string>& printed_family(Family f) {
  switch (f) {
    case Family::coords: return printed::A_h1;
    case Family::duals: return printed::Lambda_h2;
    case Family::deriv_coord: return printed::deriv_coord;
    case Family::deriv_dual: return printed::deriv_dual;
    case Family::mixed: return printed::mixed;
    case Family::deriv_deriv: return printed::deriv_deriv;
  }
  return printed::A_h1;
}

/// A word with two adjacent letters out of order that no rule rewrites.
bool has_unconstrained_pair(const Element& e, const Presentation& p) {
  for (const auto& [w, s] : e.terms()) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1] && p.rule_for(w[i], w[i + 1]) < 0) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::coords: return "coords";
    case Family::duals: return "duals";
    case Family::deriv_coord: return "deriv_coord";
    case Family::deriv_dual: return "deriv_dual";
    case Family::mixed: return "mixed";
    case Family::deriv_deriv: return "deriv_deriv";
  }
  return "";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

GradedMatrix calculus_rhat() { return rhat_of(r_h1h2()); }

std::vector<Element> expand_index_equation(Family f, const GradedMatrix* rhat) {
  const Alphabet al = calculus_alphabet();
  const Names n;
  const GradedMatrix r = rhat ? *rhat : calculus_rhat();
  std::vector<Element> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Element e;
      switch (f) {
        case Family::coords: {
          const GradedMatrix r1 = rhat_of(r_h1());
          e = g(al, n.u[i]) * g(al, n.u[j]);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e -= entry(r1, i, j, k, l) * (g(al, n.u[k]) * g(al, n.u[l]));
          break;
        }
        case Family::duals: {
          const GradedMatrix r2 = rhat_of(r_h2());
          e = g(al, n.v[i]) * g(al, n.v[j]);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e += entry(r2, i, j, k, l) * (g(al, n.v[k]) * g(al, n.v[l]));
          break;
        }
        case Family::deriv_coord:
          e = g(al, n.du[j]) * g(al, n.u[i]) - Element(Scalar(i == j ? 1 : 0));
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e -= entry(r, i, k, j, l) * (g(al, n.u[l]) * g(al, n.du[k]));
          break;
        case Family::deriv_dual:
          e = g(al, n.dv[j]) * g(al, n.v[i]);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e -= entry(r, i, k, j, l) * (g(al, n.v[l]) * g(al, n.dv[k]));
          break;
        case Family::mixed:
          e = g(al, n.u[i]) * g(al, n.v[j]);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e -= entry(r, i, j, k, l) * (g(al, n.v[k]) * g(al, n.u[l]));
          break;
        case Family::deriv_deriv:
          e = g(al, n.du[i]) * g(al, n.du[j]);
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) e -= entry(r, l, k, j, i) * (g(al, n.du[k]) * g(al, n.du[l]));
          break;
      }
      e = e.without_h1h2();
      if (!e.is_zero()) out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Element> expected_family(Family f) {
  const Alphabet al = calculus_alphabet();
  std::vector<Element> out;
  for (const auto& text : printed_family(f)) out.push_back(parse_relation(text, al));
  return out;
}

FamilyComparison compare_family(Family f) {
  const std::string name(family_name(f));
  const Alphabet al = calculus_alphabet();
  Presentation derived = orient_relations(name + "_derived", al, expand_index_equation(f), kFlags);
  Presentation expected = orient_relations(name + "_expected", al, expected_family(f), kFlags);
  FamilyComparison c{f, derived, expected, derived.same_rules(expected), {}};
  c.report = compare_ideals(derived, expected, 0);
  c.report.identity_name = "family " + name + ": derived == stated";
  if (!c.equal && c.report.passed) {
    c.report.add({"rule sets", "same ideal, different oriented rules", false, ""});
  }
  return c;
}

Presentation calculus_presentation() {
  std::vector<Element> rels;
  for (Family f : kAllFamilies) {
    auto part = expand_index_equation(f);
    rels.insert(rels.end(), part.begin(), part.end());
  }
  return orient_relations("calculus", calculus_alphabet(), std::move(rels), kFlags);
}

std::vector<VerificationReport> calculus_consistency(std::size_t max_degree) {
  const Presentation& calc = builtin_presentation("calculus");
  const Alphabet& al = calc.alphabet();
  std::vector<VerificationReport> out;

  {
    const VerificationReport raw = confluence_check(calc, max_degree);
    VerificationReport r;
    r.identity_name = raw.identity_name;
    r.notes = raw.notes;
    Reducer red(calc);
    std::size_t unconstrained = 0;
    for (const auto& res : raw.residues) {
      if (res.zero) {
        r.add(res);
        continue;
      }
      const Element diff = parse_element(res.rendered, al);
      if (has_unconstrained_pair(diff, calc)) {
        ++unconstrained;
        r.notes.push_back("unconstrained: " + res.label + " -> " + res.rendered);
      } else {
        r.add(res);
      }
    }
    r.notes.push_back(std::to_string(unconstrained) +
                      " ambiguities end in words with no printed relation");
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.identity_name = "Leibniz: derivative times a plane relation reduces to zero";
    Reducer red(calc);
    const Names n;
    for (Family f : {Family::coords, Family::duals}) {
      const auto& ds = f == Family::coords ? n.du : n.dv;
      for (const Element& rel : expand_index_equation(f)) {
        for (const char* d : ds) {
          const Element e = red.reduce(g(al, d) * rel);
          r.add({std::string(d) + " * (" + rel.render(al) + ")", e.render(al), e.is_zero(), ""});
        }
      }
    }
    out.push_back(std::move(r));
  }
  {
    // The dual family with its global minus sign against the contracted plane.
    const Presentation derived =
        orient_relations("duals", al, expand_index_equation(Family::duals), kFlags);
    const Presentation lambda = builtin_presentation("Lambda_h2");
    std::vector<Element> rels;
    for (const auto& rel : lambda.relations()) {
      rels.push_back(parse_element(rel.render(lambda.alphabet()), al));
    }
    const Presentation stated = orient_relations("Lambda_h2", al, std::move(rels), kFlags);
    VerificationReport r = compare_ideals(derived, stated, 0);
    r.identity_name = "dual index equation == Lambda_h2";
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.identity_name = "coordinate subalgebra reduces as A_h1";
    Presentation a_h1 = presentation_from_text("A_h1", al, printed::A_h1, kFlags);
    Reducer rc(calc);
    Reducer ra(a_h1);
    const Alphabet plane({{"x", Parity::even}, {"xi", Parity::odd}});
    for (const Word& w : all_words(plane, 4)) {
      const Element e = parse_element(w.empty() ? "1" : plane.render(w), al);
      const Element diff = rc.reduce(e) - ra.reduce(e);
      if (!diff.is_zero()) r.add({plane.render(w), diff.render(al), false, ""});
    }
    r.notes.push_back("all words in x, xi up to length 4 compared");
    out.push_back(std::move(r));
  }
  out.front().notes.push_back(
      "the dphi*phi relation has no inhomogeneous term, unlike dx*x; used as stated");
  return out;
}

}  // namespace superrtt
