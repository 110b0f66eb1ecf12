#include "superrtt/presentation.hpp"

#include <cstdlib>
#include <deque>
#include <string>

#include "superrtt/errors.hpp"

namespace superrtt {

Presentation::Presentation(std::string name, Alphabet alphabet, std::vector<Rule> rules,
                           PresentationFlags flags)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      flags_(flags),
      single_(alphabet_.size(), -1),
      pair_(alphabet_.size() * alphabet_.size(), -1) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& lhs = rules_[i].lhs;
    int* slot = nullptr;
    if (lhs.size() == 1) {
      slot = &single_[letter_index(lhs[0])];
    } else if (lhs.size() == 2) {
      slot = &pair_[letter_index(lhs[0]) * alphabet_.size() + letter_index(lhs[1])];
    } else {
      throw std::invalid_argument("rule lhs must have one or two letters in " + name_);
    }
    for (Letter l : lhs) {
      if (letter_index(l) >= alphabet_.size()) {
        throw std::invalid_argument("rule uses a letter outside the alphabet in " + name_);
      }
    }
    if (*slot >= 0) {
      throw std::invalid_argument("two rules share lhs " + alphabet_.render(lhs) + " in " + name_);
    }
    *slot = static_cast<int>(i);
  }
}

std::vector<Element> Presentation::relations() const {
  std::vector<Element> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(Element(r.lhs) - r.rhs);
  return out;
}

Presentation Presentation::renamed(std::string name) const {
  Presentation p = *this;
  p.name_ = std::move(name);
  return p;
}

bool Presentation::same_rules(const Presentation& other) const {
  if (!(alphabet_ == other.alphabet_) || !(flags_ == other.flags_)) return false;
  if (rules_.size() != other.rules_.size()) return false;
  for (const auto& r : rules_) {
    const int j = r.lhs.size() == 1 ? other.rule_for(r.lhs[0]) : other.rule_for(r.lhs[0], r.lhs[1]);
    if (j < 0 || !(other.rules_[j].rhs == r.rhs)) return false;
  }
  return true;
}

std::size_t default_max_steps() {
  if (const char* env = std::getenv("SUPERRTT_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

Reducer::Reducer(const Presentation& p, std::size_t max_steps) : p_(&p), max_steps_(max_steps) {}

std::pair<std::size_t, int> Reducer::find_redex(const Word& w, std::size_t from) const {
  for (std::size_t i = from; i < w.size(); ++i) {
    if (int r = p_->rule_for(w[i]); r >= 0) return {i, r};
    if (i + 1 < w.size()) {
      if (int r = p_->rule_for(w[i], w[i + 1]); r >= 0) return {i, r};
    }
  }
  return {Word::npos, -1};
}

Element Reducer::rewrite_at(const Word& w, const Scalar& s, std::size_t pos, int rule) const {
  const Rule& r = p_->rules()[rule];
  const Word prefix = w.substr(0, pos);
  const Word suffix = w.substr(pos + r.lhs.size());
  const int prefix_parity = word_parity(prefix);
  Element out;
  for (const auto& [m, c] : r.rhs.terms()) {
    out.add_term(prefix + m + suffix, project(s * c.crossed(prefix_parity)));
  }
  return out;
}

const Element& Reducer::reduce_word(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;

  // Largest word first, so that contributions to the same word merge before
  // that word is rewritten.
  std::map<Word, Scalar, DegLex> pending;
  pending.emplace(w, Scalar(1));
  Element result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& word = node.key();
    const Scalar& s = node.mapped();
    if (auto it = cache_.find(word); it != cache_.end() && word != w) {
      result += s * it->second;
      continue;
    }
    auto [pos, rule] = find_redex(word);
    if (rule < 0) {
      result.add_term(word, s);
      continue;
    }
    if (++steps > max_steps_) {
      throw NonTerminating("rewriting in " + p_->name() + " exceeded " +
                           std::to_string(max_steps_) + " steps on " +
                           p_->alphabet().render(w));
    }
    const Element rewritten = rewrite_at(word, s, pos, rule);
    for (const auto& [m, c] : rewritten.terms()) {
      auto [it, inserted] = pending.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

Element Reducer::reduce(const Element& e) {
  Element out;
  for (const auto& [w, s] : e.terms()) {
    const Scalar ps = project(s);
    if (ps.is_zero()) continue;
    for (const auto& [m, c] : reduce_word(w).terms()) out.add_term(m, project(ps * c));
  }
  return out;
}

Element normal_form(const Element& e, const Presentation& p) { return Reducer(p).reduce(e); }

bool reduces_to_zero(const Element& e, const Presentation& p) { return normal_form(e, p).is_zero(); }

namespace {

bool contains(const Word& haystack, const Word& needle) {
  return haystack.find(needle) != Word::npos;
}

Rule solve_for_leading(const Element& r, const Word& lead, const Alphabet& alphabet,
                       const PresentationFlags& flags) {
  if (lead.empty() || lead.size() > 2) {
    throw OrientationError("relation " + r.render(alphabet) + " has leading word '" +
                           alphabet.render(lead) + "' that is not one or two letters");
  }
  const Scalar c = r.coefficient(lead);
  const Scalar inv = c.inverse();
  Element rest = r - Element(lead, c);
  Element rhs = -(inv * rest);
  if (flags.assume_h1h2_zero) rhs = rhs.without_h1h2();
  return Rule{lead, std::move(rhs)};
}

}  // namespace

Presentation orient_relations(std::string name, const Alphabet& alphabet,
                              std::vector<Element> relations, PresentationFlags flags) {
  std::vector<Rule> rules;
  std::deque<Element> queue(relations.begin(), relations.end());
  std::vector<Element> deferred;

  auto current = [&] { return Presentation(name, alphabet, rules, flags); };
  Presentation pres = current();
  Reducer red(pres);

  bool progress = true;
  while (progress) {
    progress = false;
    while (!queue.empty()) {
      Element r = red.reduce(queue.front());
      queue.pop_front();
      if (r.is_zero()) continue;
      auto lead = r.leading_body_word();
      if (!lead) {
        deferred.push_back(std::move(r));
        continue;
      }
      Rule rule = solve_for_leading(r, *lead, alphabet, flags);
      // Rules whose lhs now contains the new lhs are demoted back to relations.
      for (auto it = rules.begin(); it != rules.end();) {
        if (it->lhs != rule.lhs && contains(it->lhs, rule.lhs)) {
          queue.push_back(Element(it->lhs) - it->rhs);
          it = rules.erase(it);
        } else {
          ++it;
        }
      }
      rules.push_back(std::move(rule));
      pres = current();
      red = Reducer(pres);
      progress = true;
    }
    if (!deferred.empty() && progress) {
      queue.insert(queue.end(), deferred.begin(), deferred.end());
      deferred.clear();
    }
  }
  for (auto& r : deferred) {
    r = red.reduce(r);
    if (!r.is_zero()) {
      throw OrientationError("relation " + r.render(alphabet) +
                             " has no leading word with invertible coefficient");
    }
  }

  // Interreduce right-hand sides against the final rule set.
  std::vector<Rule> final_rules = rules;
  for (auto& r : final_rules) r.rhs = red.reduce(r.rhs);
  return Presentation(std::move(name), alphabet, std::move(final_rules), flags);
}

Presentation specialize(const Presentation& p, bool h1_zero, bool h2_zero, std::string name) {
  std::vector<Element> rels;
  for (const auto& r : p.relations()) rels.push_back(r.specialize(h1_zero, h2_zero));
  return orient_relations(std::move(name), p.alphabet(), std::move(rels), p.flags());
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        out.push_back(out[i] + make_letter(g, alphabet[g].parity));
      }
    }
    begin = end;
  }
  return out;
}

VerificationReport confluence_check(const Presentation& p, std::size_t max_word_len) {
  if (max_word_len < 3) throw std::invalid_argument("confluence_check needs max_word_len >= 3");
  VerificationReport report;
  report.identity_name = "confluence(" + p.name() + ")";
  Reducer red(p);
  const auto& alphabet = p.alphabet();

  std::size_t critical = 0;
  for (const Word& w : all_words(alphabet, max_word_len)) {
    if (w.size() < 2) continue;
    std::vector<std::pair<std::size_t, int>> redexes;
    for (std::size_t i = 0; i < w.size();) {
      auto [pos, rule] = red.find_redex(w, i);
      if (rule < 0) break;
      redexes.emplace_back(pos, rule);
      // A two-letter match at pos may coexist with a one-letter match at pos.
      if (p.rule_for(w[pos]) >= 0 && pos + 1 < w.size() && p.rule_for(w[pos], w[pos + 1]) >= 0 &&
          rule != p.rule_for(w[pos], w[pos + 1])) {
        redexes.emplace_back(pos, p.rule_for(w[pos], w[pos + 1]));
      }
      i = pos + 1;
    }
    if (redexes.size() < 2) continue;

    bool overlapping = false;
    for (std::size_t a = 0; a < redexes.size(); ++a) {
      for (std::size_t b = a + 1; b < redexes.size(); ++b) {
        const auto& [pa, ra] = redexes[a];
        const auto& [pb, rb] = redexes[b];
        if (pb < pa + p.rules()[ra].lhs.size()) overlapping = true;
      }
    }
    // Overlap ambiguities are minimal when every letter belongs to a redex.
    const bool minimal = overlapping && w.size() <= 3;

    const Element first = red.reduce(red.rewrite_at(w, Scalar(1), redexes[0].first, redexes[0].second));
    for (std::size_t k = 1; k < redexes.size(); ++k) {
      const Element other =
          red.reduce(red.rewrite_at(w, Scalar(1), redexes[k].first, redexes[k].second));
      const Element diff = first - other;
      if (!minimal && diff.is_zero()) continue;
      if (minimal) ++critical;
      report.add(Residue{alphabet.render(w) + " @" + std::to_string(redexes[0].first) + "|@" +
                             std::to_string(redexes[k].first),
                         diff.render(alphabet), diff.is_zero(),
                         minimal ? "critical pair" : ""});
    }
  }
  report.notes.push_back(std::to_string(critical) + " critical pairs checked up to length " +
                         std::to_string(max_word_len));
  return report;
}

VerificationReport compare_ideals(const Presentation& a, const Presentation& b,
                                  std::size_t probe_degree) {
  if (!(a.alphabet() == b.alphabet())) {
    throw std::invalid_argument("ideals_equal needs identical generator lists");
  }
  VerificationReport report;
  report.identity_name = "ideal(" + a.name() + ") == ideal(" + b.name() + ")";
  Reducer ra(a);
  Reducer rb(b);
  const auto& alphabet = a.alphabet();

  for (const auto& rel : a.relations()) {
    Element r = rb.reduce(rel);
    report.add({a.name() + " rule " + rel.render(alphabet) + " in " + b.name(), r.render(alphabet),
                r.is_zero(), ""});
  }
  for (const auto& rel : b.relations()) {
    Element r = ra.reduce(rel);
    report.add({b.name() + " rule " + rel.render(alphabet) + " in " + a.name(), r.render(alphabet),
                r.is_zero(), ""});
  }
  for (const Word& w : all_words(alphabet, probe_degree)) {
    const Element e(w);
    const Element da = rb.reduce(ra.reduce(e)) - rb.reduce(e);
    const Element db = ra.reduce(rb.reduce(e)) - ra.reduce(e);
    if (!da.is_zero() || !db.is_zero()) {
      report.add({"probe " + alphabet.render(w), (da + db).render(alphabet), false, ""});
    }
  }
  return report;
}

bool ideals_equal(const Presentation& a, const Presentation& b, std::size_t probe_degree) {
  return compare_ideals(a, b, probe_degree).passed;
}

}  // namespace superrtt
