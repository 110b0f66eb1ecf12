#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superrtt/scalar.hpp"

namespace superrtt {

enum class Parity : int { even = 0, odd = 1 };

struct Generator {
  std::string name;
  Parity parity = Parity::even;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A letter packs the generator index and its parity: (index << 1) | parity.
/// Comparing letters therefore compares generator indices.
using Letter = unsigned char;

inline constexpr std::size_t kMaxGenerators = 64;

inline Letter make_letter(std::size_t index, Parity parity) {
  return static_cast<Letter>((index << 1) | static_cast<unsigned>(parity));
}
inline std::size_t letter_index(Letter l) { return l >> 1; }
inline int letter_parity(Letter l) { return l & 1; }

/// Sequence of letters; the empty word is the unit.
using Word = std::basic_string<Letter>;

int word_parity(const Word& w);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
  }
};

/// Degree-lexicographic order: shorter words first, then by generator index.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Ordered generator list; position defines the normal order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  std::size_t size() const noexcept { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }

  std::optional<std::size_t> find(std::string_view name) const;
  Letter letter(std::string_view name) const;
  Word word(std::initializer_list<std::string_view> names) const;

  std::string render(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> gens_;
};

/// Finite sum of scalar * word, scalars written to the left.
class Element {
 public:
  using TermMap = std::map<Word, Scalar, DegLex>;

  Element() = default;
  Element(const Scalar& s);  // NOLINT(google-explicit-constructor)
  Element(long v) : Element(Scalar(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Element(const Word& w, const Scalar& s = Scalar(1));

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Scalar attached to w (zero if absent).
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& s);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  /// Graded product: moving a scalar of `b` left past a word of `a` picks up
  /// (-1)^{|scalar| |word|}.
  friend Element operator*(const Element& a, const Element& b);
  Element& operator*=(const Element& o) { return *this = *this * o; }

  /// Left multiplication by a scalar (no sign).
  friend Element operator*(const Scalar& s, const Element& e);

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Parity of a homogeneous element (word parity plus scalar parity);
  /// nullopt for mixed, 0 for zero.
  std::optional<int> parity() const;

  /// Highest Grassmann-degree-0 word, if any.
  std::optional<Word> leading_body_word() const;

  Element map_scalars(const std::function<Scalar(const Scalar&)>& f) const;
  Element without_h1h2() const;
  Element specialize(bool h1_zero, bool h2_zero) const;
  Element limit_at(Var v, const Rational& value) const;

  /// Canonical text: terms grouped by Grassmann basis (1, h1, h2, h1*h2),
  /// words in descending degree-lex order within each group.
  std::string render(const Alphabet& alphabet) const;

 private:
  TermMap terms_;
};

Element multiply(const Element& a, const Element& b);

/// Word raised to a power, as an element.
Element power(const Element& e, int n);

}  // namespace superrtt
