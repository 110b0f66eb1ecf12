#include "superrtt/algebra.hpp"

#include <stdexcept>

#include "superrtt/format.hpp"

namespace superrtt {

int word_parity(const Word& w) {
  int p = 0;
  for (Letter l : w) p ^= letter_parity(l);
  return p;
}

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > kMaxGenerators) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[i].name == gens_[j].name) {
        throw std::invalid_argument("duplicate generator '" + gens_[i].name + "'");
      }
    }
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return make_letter(*i, gens_[*i].parity);
}

Word Alphabet::word(std::initializer_list<std::string_view> names) const {
  Word w;
  for (auto n : names) w.push_back(letter(n));
  return w;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += gens_.at(letter_index(w[i])).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Element::Element(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(Word{}, s);
}

Element::Element(const Word& w, const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(w, s);
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Word& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, s] : r.terms_) s = -s;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, s] : o.terms_) add_term(w, s);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, s] : o.terms_) add_term(w, -s);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element r;
  for (const auto& [wa, sa] : a.terms_) {
    const int pa = word_parity(wa);
    for (const auto& [wb, sb] : b.terms_) {
      r.add_term(wa + wb, sa * sb.crossed(pa));
    }
  }
  return r;
}

Element operator*(const Scalar& s, const Element& e) {
  Element r;
  if (s.is_zero()) return r;
  for (const auto& [w, t] : e.terms_) r.add_term(w, s * t);
  return r;
}

std::optional<int> Element::parity() const {
  std::optional<int> result;
  for (const auto& [w, s] : terms_) {
    const int wp = word_parity(w);
    for (int b = 0; b < kGrassmannDim; ++b) {
      if (s.component(b).is_zero()) continue;
      const int p = wp ^ grassmann_parity(b);
      if (result && *result != p) return std::nullopt;
      result = p;
    }
  }
  return result.value_or(0);
}

std::optional<Word> Element::leading_body_word() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!it->second.component(kOne).is_zero()) return it->first;
  }
  return std::nullopt;
}

Element Element::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
  Element r;
  for (const auto& [w, s] : terms_) r.add_term(w, f(s));
  return r;
}

Element Element::without_h1h2() const {
  return map_scalars([](const Scalar& s) { return s.without_h1h2(); });
}

Element Element::specialize(bool h1_zero, bool h2_zero) const {
  return map_scalars([&](const Scalar& s) { return s.specialize(h1_zero, h2_zero); });
}

Element Element::limit_at(Var v, const Rational& value) const {
  return map_scalars([&](const Scalar& s) { return s.limit_at(v, value); });
}

std::string Element::render(const Alphabet& alphabet) const {
  static constexpr const char* kBasis[kGrassmannDim] = {"", "h1", "h2", "h1*h2"};
  std::vector<TermText> parts;
  for (int b = 0; b < kGrassmannDim; ++b) {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const RatFunc& c = it->second.component(b);
      if (c.is_zero()) continue;
      std::string mono = kBasis[b];
      std::string w = alphabet.render(it->first);
      if (!w.empty()) mono = mono.empty() ? w : mono + "*" + w;
      parts.push_back({c, mono});
    }
  }
  return render_sum(parts);
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Element power(const Element& e, int n) {
  if (n < 0) throw std::invalid_argument("negative power of an algebra element");
  Element r(Scalar(1));
  for (int i = 0; i < n; ++i) r = r * e;
  return r;
}

}  // namespace superrtt
