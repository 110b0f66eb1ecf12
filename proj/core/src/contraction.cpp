#include "superrtt/contraction.hpp"

#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"

namespace superrtt {

namespace {

GradedMatrix unitriangular(const Scalar& upper, const Scalar& lower) {
  return GradedMatrix::from_scalars(grades_1_1(), {{Scalar(1), upper}, {lower, Scalar(1)}});
}

Scalar f1() { return Scalar::h1() * Scalar(RatFunc(Poly(1), Poly::variable(Var::p) - Poly(1))); }
Scalar f2() { return Scalar::h2() * Scalar(RatFunc(Poly(1), Poly::variable(Var::q) - Poly(1))); }

GradedMatrix map_scalars(const GradedMatrix& m, const std::function<Scalar(const Scalar&)>& f) {
  return m.map([&](const Element& e) { return e.map_scalars(f); });
}

Presentation limit_presentation(const Presentation& generic, Var v, std::string name) {
  std::vector<Element> rels;
  for (const auto& r : generic.relations()) rels.push_back(r.limit_at(v, 1));
  return orient_relations(std::move(name), generic.alphabet(), std::move(rels), generic.flags());
}

}  // namespace

ContractionMatrix g_h1() {
  // The off-diagonal entry squares to zero, so (I + N)^{-1} = I - N.
  return {"g_h1", unitriangular(Scalar(), f1()), unitriangular(Scalar(), -f1())};
}

ContractionMatrix g_h2() {
  return {"g_h2", unitriangular(f2(), Scalar()), unitriangular(-f2(), Scalar())};
}

ContractionMatrix g_h1h2() {
  const ContractionMatrix a = g_h1();
  const ContractionMatrix b = g_h2();
  return {"g", a.g * b.g, b.g_inv * a.g_inv};
}

ContractionMatrix g_identity() {
  return {"I", GradedMatrix::identity(grades_1_1()), GradedMatrix::identity(grades_1_1())};
}

ContractionMatrix contraction_matrix(std::string name, const GradedMatrix& g) {
  return {std::move(name), g, inverse(g)};
}

ContractionMatrix specialize(const ContractionMatrix& c, bool h1_zero, bool h2_zero) {
  auto f = [&](const Scalar& s) { return s.specialize(h1_zero, h2_zero); };
  return {c.name, map_scalars(c.g, f), map_scalars(c.g_inv, f)};
}

Element substitute(const Element& e, const Alphabet& alphabet,
                   const std::vector<std::pair<std::string, Element>>& images) {
  std::vector<Element> image(alphabet.size());
  std::vector<bool> mapped(alphabet.size(), false);
  for (const auto& [name, img] : images) {
    const std::size_t i = letter_index(alphabet.letter(name));
    image[i] = img;
    mapped[i] = true;
  }
  Element out;
  for (const auto& [w, s] : e.terms()) {
    Element term{Scalar(s)};
    for (Letter l : w) {
      const std::size_t i = letter_index(l);
      term *= mapped[i] ? image[i] : Element(Word(1, l));
    }
    out += term;
  }
  return out;
}

Presentation contract_plane(const Presentation& source, const ContractionMatrix& g,
                            const std::vector<std::string>& coords, Var limit_var,
                            std::string name) {
  if (coords.size() != 2) throw DimensionError("contract_plane needs two coordinates");
  const Alphabet& al = source.alphabet();
  std::vector<std::pair<std::string, Element>> images;
  for (std::size_t i = 0; i < 2; ++i) {
    Element img;
    for (std::size_t k = 0; k < 2; ++k) img += g.g.at(i, k) * Element(Word(1, al.letter(coords[k])));
    images.emplace_back(coords[i], std::move(img));
  }
  std::vector<Element> rels;
  for (const auto& r : source.relations()) rels.push_back(substitute(r, al, images));
  const Presentation generic = orient_relations(name + "_generic", al, std::move(rels), source.flags());
  return limit_presentation(generic, limit_var, std::move(name));
}

GradedMatrix conjugated_generators(const ContractionMatrix& g, const Alphabet& alphabet) {
  GradedMatrix t(grades_1_1(), grades_1_1());
  const char* names[2][2] = {{"a", "beta"}, {"gamma", "d"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.at(i, j) = Element(Word(1, alphabet.letter(names[i][j])));
  return g.g * t * g.g_inv;
}

Presentation contract_supergroup(const SupergroupOptions& options) {
  const Presentation& source = builtin_presentation("GL_pq");
  const Alphabet& al = source.alphabet();
  const ContractionMatrix g = specialize(g_h1h2(), options.h1_zero, options.h2_zero);
  const GradedMatrix tp = conjugated_generators(g, al);
  const std::vector<std::pair<std::string, Element>> images = {
      {"a", tp.at(0, 0)}, {"beta", tp.at(0, 1)}, {"gamma", tp.at(1, 0)}, {"d", tp.at(1, 1)}};

  std::vector<Element> rels;
  for (const auto& r : source.relations()) rels.push_back(substitute(r, al, images));
  const Presentation generic = orient_relations("GL_contracted_generic", al, std::move(rels));
  const Var first = options.q_first ? Var::q : Var::p;
  const Var second = options.q_first ? Var::p : Var::q;
  const Presentation mid = limit_presentation(generic, first, "GL_contracted_mid");
  return limit_presentation(mid, second, "GL_contracted");
}

GradedMatrix contract_rmatrix(const RMatrixOptions& options) {
  const ContractionMatrix g = specialize(g_h1h2(), options.h1_zero, options.h2_zero);
  const GradedMatrix gg = kronecker(g.g, g.g, options.signs);
  const GradedMatrix gg_inv = inverse(gg);
  const GradedMatrix conj = gg_inv * r_pq() * gg;
  const Var first = options.p_first ? Var::p : Var::q;
  const Var second = options.p_first ? Var::q : Var::p;
  return conj.map([&](const Element& e) { return e.limit_at(first, 1).limit_at(second, 1); });
}

}  // namespace superrtt
