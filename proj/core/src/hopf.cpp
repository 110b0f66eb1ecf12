#include "superrtt/hopf.hpp"

#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/rmatrix.hpp"

namespace superrtt {

namespace {

constexpr Parity E = Parity::even;
constexpr Parity O = Parity::odd;

const Presentation& base() { return builtin_presentation("GL_h1h2"); }

Element gen(const Alphabet& al, std::string_view name) { return Element(Word(1, al.letter(name))); }

/// Same words over another alphabet, matched by generator name.
Element transfer(const Element& e, const Alphabet& from, const Alphabet& to) {
  Element out;
  for (const auto& [w, s] : e.terms()) {
    Word v;
    for (Letter l : w) v.push_back(to.letter(from[letter_index(l)].name));
    out.add_term(v, s);
  }
  return out;
}

const char* kEntryNames[2][2] = {{"a", "beta"}, {"gamma", "d"}};

TensorElement base_generator(const Alphabet& al, std::string_view name) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (name != kEntryNames[i][j]) continue;
      TensorElement t(2);
      for (int k = 0; k < 2; ++k) {
        t += TensorElement::pure({gen(al, kEntryNames[i][k]), gen(al, kEntryNames[k][j])});
      }
      return t;
    }
  }
  throw UnsupportedGenerator("no coproduct for generator '" + std::string(name) + "'");
}

}  // namespace

Alphabet localized_alphabet() {
  return Alphabet({{"a", E}, {"ainv", E}, {"beta", O}, {"gamma", O}, {"d", E}, {"dinv", E}});
}

Presentation localization() {
  const Presentation& b = base();
  Reducer bred(b);
  const Alphabet la = localized_alphabet();
  const Alphabet& ba = b.alphabet();
  auto g = [&](std::string_view n) { return gen(la, n); };
  auto commutator_nf = [&](std::string_view x, std::string_view y) {
    const Element c = gen(ba, x) * gen(ba, y) - gen(ba, y) * gen(ba, x);
    return transfer(bred.reduce(c), ba, la);
  };

  std::vector<Rule> rules;
  for (const auto& r : b.rules()) {
    rules.push_back({transfer(Element(r.lhs), ba, la).terms().begin()->first, transfer(r.rhs, ba, la)});
  }
  rules.push_back({la.word({"a", "ainv"}), Element(1)});
  rules.push_back({la.word({"ainv", "a"}), Element(1)});
  rules.push_back({la.word({"d", "dinv"}), Element(1)});
  rules.push_back({la.word({"dinv", "d"}), Element(1)});
  for (const char* x : {"beta", "gamma", "d"}) {
    rules.push_back({la.word({x, "ainv"}),
                     g("ainv") * g(x) - g("ainv") * commutator_nf(x, "a") * g("ainv")});
  }
  for (const char* x : {"a", "beta", "gamma"}) {
    rules.push_back({la.word({"dinv", x}),
                     g(x) * g("dinv") + g("dinv") * commutator_nf(x, "d") * g("dinv")});
  }
  rules.push_back({la.word({"dinv", "ainv"}),
                   g("ainv") * g("dinv") +
                       g("dinv") * g("ainv") * commutator_nf("d", "a") * g("ainv") * g("dinv")});
  return Presentation("GL_h1h2_loc", la, std::move(rules));
}

TensorElement coproduct(const Element& e, const Alphabet& alphabet) {
  TensorElement out(2);
  for (const auto& [w, s] : e.terms()) {
    TensorElement term = TensorElement::unit(2, s);
    for (Letter l : w) term = term * base_generator(alphabet, alphabet[letter_index(l)].name);
    out += term;
  }
  return out;
}

Scalar counit(const Element& e, const Alphabet& alphabet) {
  Scalar out;
  for (const auto& [w, s] : e.terms()) {
    bool zero = false;
    for (Letter l : w) {
      const std::string& n = alphabet[letter_index(l)].name;
      if (n == "beta" || n == "gamma") {
        zero = true;
      } else if (n != "a" && n != "d" && n != "ainv" && n != "dinv") {
        throw UnsupportedGenerator("no counit for generator '" + n + "'");
      }
    }
    if (!zero) out += s;
  }
  return out;
}

LocalizedCoproduct::LocalizedCoproduct()
    : loc_(&builtin_presentation("GL_h1h2_loc")), red_(*loc_), cache_(loc_->alphabet().size()) {}

TensorElement LocalizedCoproduct::inverse_of(Letter x, Letter xinv, Letter off_left,
                                             Letter off_right, std::size_t& length) {
  // Delta(x) = (x (x) x)(1 + N) with N = x^{-1} l (x) x^{-1} r, so
  // Delta(x^{-1}) = sum_k (-N)^k (x^{-1} (x) x^{-1}) as long as N is nilpotent.
  const Element xi(Word(1, xinv));
  const TensorElement n = reduce(TensorElement::pure(
      {xi * Element(Word(1, off_left)), xi * Element(Word(1, off_right))}));
  const TensorElement tail = TensorElement::pure({xi, xi});
  TensorElement sum(2);
  TensorElement power = TensorElement::unit(2);
  constexpr std::size_t kMaxTerms = 16;
  for (length = 0; length < kMaxTerms && !power.is_zero(); ++length) {
    sum += reduce(power * tail);
    power = reduce(Scalar(-1) * power * n);
  }
  if (!power.is_zero()) {
    throw NonTerminating("coproduct of the inverse of " + loc_->alphabet().render(Word(1, x)) +
                         " did not terminate");
  }
  return sum;
}

TensorElement LocalizedCoproduct::generator(Letter l) {
  const std::size_t i = letter_index(l);
  if (cache_[i]) return *cache_[i];
  const Alphabet& al = loc_->alphabet();
  const std::string& n = al[i].name;
  TensorElement t(2);
  if (n == "ainv") {
    t = inverse_of(al.letter("a"), l, al.letter("beta"), al.letter("gamma"), len_a_);
  } else if (n == "dinv") {
    t = inverse_of(al.letter("d"), l, al.letter("gamma"), al.letter("beta"), len_d_);
  } else {
    t = base_generator(al, n);
  }
  cache_[i] = std::make_unique<TensorElement>(t);
  return t;
}

TensorElement LocalizedCoproduct::operator()(const Element& e) {
  TensorElement out(2);
  for (const auto& [w, s] : e.terms()) {
    TensorElement term = TensorElement::unit(2, s);
    for (Letter l : w) term = reduce(term * generator(l));
    out += term;
  }
  return reduce(out);
}

Element superdet(const Alphabet& la) {
  auto g = [&](std::string_view n) { return gen(la, n); };
  return g("a") * g("dinv") - g("beta") * g("dinv") * g("gamma") * g("dinv");
}

GradedMatrix antipode_matrix(const Alphabet& la) {
  auto g = [&](std::string_view n) { return gen(la, n); };
  GradedMatrix s(grades_1_1(), grades_1_1());
  s.at(0, 0) = g("ainv") + g("ainv") * g("beta") * g("dinv") * g("gamma") * g("ainv");
  s.at(0, 1) = -(g("ainv") * g("beta") * g("dinv"));
  s.at(1, 0) = -(g("dinv") * g("gamma") * g("ainv"));
  s.at(1, 1) = g("dinv") + g("dinv") * g("gamma") * g("ainv") * g("beta") * g("dinv");
  return s;
}

Element clear_inverses(const Element& relation) {
  const Presentation& b = base();
  Reducer bred(b);
  const Alphabet la = localized_alphabet();
  const Alphabet& ba = b.alphabet();
  const Letter D = la.letter("d");
  const Letter DI = la.letter("dinv");
  const Letter AI = la.letter("ainv");

  std::vector<Element> commutator(la.size());
  for (const char* x : {"a", "beta", "gamma"}) {
    const Element c = gen(ba, x) * gen(ba, "d") - gen(ba, "d") * gen(ba, x);
    commutator[letter_index(la.letter(x))] = Element(Word(1, DI)) *
                                             transfer(bred.reduce(c), ba, la) *
                                             Element(Word(1, DI));
  }

  std::map<Word, Scalar, DegLex> pending(relation.terms().begin(), relation.terms().end());
  std::vector<std::pair<Word, std::pair<std::size_t, Scalar>>> done;  // prefix, (k, scalar)
  auto push = [&](const Word& w, const Scalar& s) {
    auto [it, inserted] = pending.try_emplace(w, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  const std::size_t max_steps = default_max_steps();
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > max_steps) throw NonTerminating("clearing inverses did not terminate");
    auto node = pending.extract(pending.begin());
    const Word w = node.key();
    const Scalar s = node.mapped();
    if (w.find(AI) != Word::npos) throw UnsupportedGenerator("clear_inverses handles d^{-1} only");

    std::size_t cancel = Word::npos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((w[i] == D && w[i + 1] == DI) || (w[i] == DI && w[i + 1] == D)) {
        cancel = i;
        break;
      }
    }
    if (cancel != Word::npos) {
      push(w.substr(0, cancel) + w.substr(cancel + 2), s);
      continue;
    }
    std::size_t pos = Word::npos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == DI && w[i + 1] != DI) {
        pos = i;
        break;
      }
    }
    if (pos == Word::npos) {
      std::size_t k = 0;
      while (k < w.size() && w[w.size() - 1 - k] == DI) ++k;
      done.push_back({w.substr(0, w.size() - k), {k, s}});
      continue;
    }
    const Letter x = w[pos + 1];
    const Word prefix = w.substr(0, pos);
    const Word suffix = w.substr(pos + 2);
    push(prefix + x + DI + suffix, s);
    const Element extra = Element(prefix, s) * commutator[letter_index(x)] * Element(suffix);
    for (const auto& [m, c] : extra.terms()) push(m, c);
  }

  std::size_t depth = 0;
  for (const auto& [w, ks] : done) depth = std::max(depth, ks.first);
  Element cleared;
  for (const auto& [w, ks] : done) {
    cleared.add_term(w + Word(depth - ks.first, D), ks.second);
  }
  return bred.reduce(transfer(cleared, la, ba));
}

const std::vector<std::string>& helper_relations() {
  static const std::vector<std::string> rels = {
      "dinv*beta = beta*dinv - h2*(1 - a*dinv + dinv*beta*gamma*dinv)",
      "dinv*gamma = gamma*dinv + h1*(1 - a*dinv - dinv*gamma*beta*dinv)",
      "a*dinv = dinv*a + h1*dinv*beta*(1 - a*dinv) + h2*(1 - dinv*a)*gamma*dinv",
      "gamma*dinv*gamma = 0",
      "h1*beta*dinv*gamma*beta = -h1*h2*beta*gamma*(a*dinv - 1)",
  };
  return rels;
}

VerificationReport coproduct_homomorphism() {
  const Presentation& b = base();
  Reducer red(b);
  VerificationReport report;
  report.identity_name = "Delta(relation) = 0 in A (x) A";
  for (const auto& text : printed::GL_h1h2) {
    const TensorElement t = coproduct(parse_relation(text, b.alphabet()), b.alphabet()).reduce(red);
    report.add({text, t.render(b.alphabet()), t.is_zero(), ""});
  }
  return report;
}

VerificationReport counit_axioms() {
  const Presentation& b = base();
  const Alphabet& al = b.alphabet();
  VerificationReport report;
  report.identity_name = "counit axioms";
  auto eps_word = [&](const Word& w) { return TensorElement::unit(0, counit(Element(w), al)); };
  for (const char* n : {"a", "beta", "gamma", "d"}) {
    const Element t = gen(al, n);
    const TensorElement delta = coproduct(t, al);
    const TensorElement expected = TensorElement::pure({t});
    const TensorElement left = delta.map_factor(0, 0, eps_word) - expected;
    const TensorElement right = delta.map_factor(1, 0, eps_word) - expected;
    report.add({std::string("(eps x id) Delta(") + n + ") - " + n, left.render(al), left.is_zero(), ""});
    report.add({std::string("(id x eps) Delta(") + n + ") - " + n, right.render(al), right.is_zero(), ""});
  }
  for (const auto& text : printed::GL_h1h2) {
    const Scalar s = counit(parse_relation(text, al), al);
    report.add({"eps(" + text + ")", s.to_string(), s.is_zero(), ""});
  }
  const Alphabet la = localized_alphabet();
  const Scalar ed = counit(superdet(la), la) - Scalar(1);
  report.add({"eps(D) - 1", ed.to_string(), ed.is_zero(), ""});
  return report;
}

VerificationReport coassociativity() {
  const Presentation& b = base();
  const Alphabet& al = b.alphabet();
  Reducer red(b);
  VerificationReport report;
  report.identity_name = "(Delta x id) Delta = (id x Delta) Delta";
  auto delta_word = [&](const Word& w) { return coproduct(Element(w), al); };
  for (const char* n : {"a", "beta", "gamma", "d"}) {
    const TensorElement d = coproduct(gen(al, n), al);
    const TensorElement diff =
        (d.map_factor(0, 2, delta_word) - d.map_factor(1, 2, delta_word)).reduce(red);
    report.add({n, diff.render(al), diff.is_zero(), ""});
  }
  return report;
}

VerificationReport antipode_check() {
  const Presentation& loc = builtin_presentation("GL_h1h2_loc");
  const Alphabet& la = loc.alphabet();
  GradedMatrix t(grades_1_1(), grades_1_1());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.at(i, j) = gen(la, kEntryNames[i][j]);
  const GradedMatrix s = antipode_matrix(la);
  const GradedMatrix id = GradedMatrix::identity(grades_1_1());
  VerificationReport a = matrix_report("T T^-1 - I", t * s - id, la, &loc);
  VerificationReport b = matrix_report("T^-1 T - I", s * t - id, la, &loc);
  VerificationReport report;
  report.identity_name = "antipode T T^-1 = T^-1 T = I";
  for (auto& r : a.residues) report.add({"T T^-1 " + r.label, r.rendered, r.zero, ""});
  for (auto& r : b.residues) report.add({"T^-1 T " + r.label, r.rendered, r.zero, ""});
  return report;
}

std::vector<VerificationReport> superdet_suite() {
  const Presentation& loc = builtin_presentation("GL_h1h2_loc");
  const Alphabet& la = loc.alphabet();
  Reducer red(loc);
  auto g = [&](std::string_view n) { return gen(la, n); };
  const Element D = superdet(la);
  std::vector<VerificationReport> out;

  {
    VerificationReport r;
    r.identity_name = "a d^-1 - beta d^-1 gamma d^-1 = d^-1 a - d^-1 beta d^-1 gamma";
    const Element e = red.reduce(D - (g("dinv") * g("a") - g("dinv") * g("beta") * g("dinv") * g("gamma")));
    r.add({"difference", e.render(la), e.is_zero(), ""});
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.identity_name = "D central: D t = t D";
    for (const char* n : {"a", "beta", "gamma", "d"}) {
      const Element e = red.reduce(D * g(n) - g(n) * D);
      r.add({std::string("[D, ") + n + "]", e.render(la), e.is_zero(), ""});
    }
    for (const char* n : {"ainv", "dinv"}) {
      const Element e = red.reduce(D * g(n) - g(n) * D);
      r.notes.push_back(std::string("[D, ") + n + "] = " + e.render(la) + " (not asserted)");
    }
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.identity_name = "Delta(D) = D (x) D";
    LocalizedCoproduct delta;
    const TensorElement lhs = delta(D);
    const TensorElement rhs = delta.reduce(TensorElement::pure({D, D}));
    const TensorElement diff = lhs - rhs;
    r.add({"Delta(D) - D (x) D", diff.render(la), diff.is_zero(), ""});
    const TensorElement inv = delta(g("dinv") * g("d")) - TensorElement::unit(2);
    r.add({"Delta(d^-1) Delta(d) - 1 (x) 1", inv.render(la), inv.is_zero(), ""});
    r.notes.push_back("Delta(d^-1) series has " + std::to_string(delta.series_length('d')) +
                      " nonzero terms");
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.identity_name = "helper relations for the superdeterminant";
    for (const auto& text : helper_relations()) {
      const Element rel = parse_relation(text, la);
      const Element in_loc = red.reduce(rel);
      r.add({"localization: " + text, in_loc.render(la), in_loc.is_zero(), ""});
      const Element cleared = clear_inverses(rel);
      r.add({"cleared: " + text, cleared.render(base().alphabet()), cleared.is_zero(), ""});
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace superrtt
