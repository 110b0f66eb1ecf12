#include "superrtt/tensor.hpp"

#include <stdexcept>

#include "superrtt/format.hpp"

namespace superrtt {

namespace {

int parity_sum(const TensorElement::Key& k, std::size_t begin, std::size_t end) {
  int p = 0;
  for (std::size_t i = begin; i < end; ++i) p ^= word_parity(k[i]);
  return p;
}

}  // namespace

TensorElement TensorElement::pure(const std::vector<Element>& factors) {
  TensorElement acc = unit(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    TensorElement next(factors.size());
    for (const auto& [key, s] : acc.terms_) {
      const int before = parity_sum(key, 0, i);
      for (const auto& [w, c] : factors[i].terms()) {
        Key k = key;
        k[i] = w;
        next.add_term(k, s * c.crossed(before));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

TensorElement TensorElement::unit(std::size_t factors, const Scalar& s) {
  TensorElement t(factors);
  t.add_term(Key(factors), s);
  return t;
}

void TensorElement::add_term(const Key& k, const Scalar& s) {
  if (k.size() != factors_) throw std::invalid_argument("tensor key has the wrong number of factors");
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, s] : r.terms_) s = -s;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, s] : o.terms_) add_term(k, s);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, s] : o.terms_) add_term(k, -s);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.factors_ != b.factors_) throw std::invalid_argument("tensor factor counts differ");
  const std::size_t n = a.factors_;
  TensorElement r(n);
  for (const auto& [ka, sa] : a.terms_) {
    const int pa = parity_sum(ka, 0, n);
    for (const auto& [kb, sb] : b.terms_) {
      int sign = 0;
      for (std::size_t i = 0; i < n; ++i) {
        sign ^= word_parity(kb[i]) & parity_sum(ka, i + 1, n);
      }
      TensorElement::Key k(n);
      for (std::size_t i = 0; i < n; ++i) k[i] = ka[i] + kb[i];
      Scalar s = sa * sb.crossed(pa);
      r.add_term(k, sign ? -s : s);
    }
  }
  return r;
}

TensorElement operator*(const Scalar& s, const TensorElement& t) {
  TensorElement r(t.factors_);
  for (const auto& [k, c] : t.terms_) r.add_term(k, s * c);
  return r;
}

TensorElement TensorElement::map_factor(std::size_t i, std::size_t width,
                                        const std::function<TensorElement(const Word&)>& f) const {
  const std::size_t n = factors_ - 1 + width;
  TensorElement r(n);
  for (const auto& [key, s] : terms_) {
    const TensorElement img = f(key[i]);
    const int before = parity_sum(key, 0, i);
    for (const auto& [ik, c] : img.terms_) {
      Key k;
      k.reserve(n);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(i));
      k.insert(k.end(), ik.begin(), ik.end());
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(i) + 1, key.end());
      r.add_term(k, s * c.crossed(before));
    }
  }
  return r;
}

TensorElement TensorElement::reduce(Reducer& reducer) const {
  TensorElement cur = *this;
  for (std::size_t i = 0; i < factors_; ++i) {
    cur = cur.map_factor(i, 1, [&](const Word& w) {
      TensorElement t(1);
      for (const auto& [m, c] : reducer.reduce_word(w).terms()) t.add_term({m}, c);
      return t;
    });
  }
  // Reduction may leave scalars the presentation treats as zero.
  TensorElement out(factors_);
  for (const auto& [k, s] : cur.terms_) out.add_term(k, reducer.project(s));
  return out;
}

std::string TensorElement::render(const Alphabet& alphabet) const {
  std::vector<TermText> groups[kGrassmannDim];
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (i) mono += " (x) ";
      mono += it->first[i].empty() ? "1" : alphabet.render(it->first[i]);
    }
    for (int b = 0; b < kGrassmannDim; ++b) {
      if (it->second.component(b).is_zero()) continue;
      std::string m = b == kOne ? mono : (b == kH1 ? "h1*" : b == kH2 ? "h2*" : "h1*h2*") + mono;
      groups[b].push_back({it->second.component(b), m});
    }
  }
  std::vector<TermText> all;
  for (auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  return render_sum(all);
}

}  // namespace superrtt
