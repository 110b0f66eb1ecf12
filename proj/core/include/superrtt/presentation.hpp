#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "superrtt/algebra.hpp"
#include "superrtt/report.hpp"

namespace superrtt {

/// Oriented rewrite rule lhs -> rhs, lhs of length 1 or 2.
struct Rule {
  Word lhs;
  Element rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct PresentationFlags {
  /// Work modulo the scalar ideal generated by h1 h2.
  bool assume_h1h2_zero = false;

  friend bool operator==(const PresentationFlags&, const PresentationFlags&) = default;
};

/// Finitely presented graded algebra over the Grassmann scalars.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, Alphabet alphabet, std::vector<Rule> rules,
               PresentationFlags flags = {});

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const PresentationFlags& flags() const noexcept { return flags_; }

  /// Index of the rule whose lhs is the given one- or two-letter word, or -1.
  int rule_for(Letter a) const { return single_[letter_index(a)]; }
  int rule_for(Letter a, Letter b) const {
    return pair_[letter_index(a) * alphabet_.size() + letter_index(b)];
  }

  /// lhs - rhs for every rule.
  std::vector<Element> relations() const;

  /// Same presentation with a new name.
  Presentation renamed(std::string name) const;

  /// Structural equality of alphabets, flags and rule maps (names ignored).
  bool same_rules(const Presentation& other) const;

  Letter letter(std::string_view name) const { return alphabet_.letter(name); }

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  PresentationFlags flags_;
  std::vector<int> single_;
  std::vector<int> pair_;
};

/// Step bound for rewriting; SUPERRTT_MAX_STEPS overrides the default 100000.
std::size_t default_max_steps();

/// Normal-form engine with a per-word cache. Not thread-safe; create one per
/// thread.
class Reducer {
 public:
  explicit Reducer(const Presentation& p, std::size_t max_steps = default_max_steps());

  const Presentation& presentation() const noexcept { return *p_; }

  Element reduce(const Element& e);
  const Element& reduce_word(const Word& w);

  /// Leftmost redex position and rule index, or {npos, -1}.
  std::pair<std::size_t, int> find_redex(const Word& w, std::size_t from = 0) const;

  /// Apply rule `rule` at `pos` of s*w, one step.
  Element rewrite_at(const Word& w, const Scalar& s, std::size_t pos, int rule) const;

  Scalar project(const Scalar& s) const {
    return p_->flags().assume_h1h2_zero ? s.without_h1h2() : s;
  }

 private:
  const Presentation* p_;
  std::size_t max_steps_;
  std::unordered_map<Word, Element, WordHash> cache_;
};

Element normal_form(const Element& e, const Presentation& p);
bool reduces_to_zero(const Element& e, const Presentation& p);

/// Orient and interreduce a list of relations (each meaning `r = 0`) into a
/// presentation. Each relation is solved for its highest degree-lex word with
/// invertible coefficient; rhs sides are fully reduced at the end.
/// Throws OrientationError when a nonzero relation has no such word, or its
/// leading word is longer than two letters.
Presentation orient_relations(std::string name, const Alphabet& alphabet,
                              std::vector<Element> relations, PresentationFlags flags = {});

/// Re-orient after mapping every rule's scalars (e.g. h2 -> 0).
Presentation specialize(const Presentation& p, bool h1_zero, bool h2_zero, std::string name);

/// Overlap ambiguities and all words up to `max_word_len`: every one-step
/// rewrite of a word must reach the same normal form.
VerificationReport confluence_check(const Presentation& p, std::size_t max_word_len);

/// Mutual ideal containment plus a congruence probe on all words up to
/// `probe_degree`.
bool ideals_equal(const Presentation& a, const Presentation& b, std::size_t probe_degree = 4);

/// Detailed form of ideals_equal.
VerificationReport compare_ideals(const Presentation& a, const Presentation& b,
                                  std::size_t probe_degree = 4);

/// All words over the alphabet of length 0..max_len.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len);

}  // namespace superrtt
