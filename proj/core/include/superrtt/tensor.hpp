#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superrtt/algebra.hpp"
#include "superrtt/presentation.hpp"

namespace superrtt {

/// Element of the n-fold graded tensor power of an algebra, stored as
/// scalar * (w1 (x) ... (x) wn) with the scalar on the left.
///
/// (u1 (x) ... (x) un)(v1 (x) ... (x) vn) = (-1)^s (u1 v1 (x) ... (x) un vn)
/// where s sums |vi| |uj| over j > i.
class TensorElement {
 public:
  using Key = std::vector<Word>;
  using TermMap = std::map<Key, Scalar>;

  explicit TensorElement(std::size_t factors = 2) : factors_(factors) {}

  /// e1 (x) e2 (x) ... with the Koszul sign for scalars of later factors.
  static TensorElement pure(const std::vector<Element>& factors);
  /// Scalar multiple of 1 (x) ... (x) 1.
  static TensorElement unit(std::size_t factors, const Scalar& s = Scalar(1));

  std::size_t factors() const noexcept { return factors_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& s);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const Scalar& s, const TensorElement& t);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.factors_ == b.factors_ && a.terms_ == b.terms_;
  }

  /// Replace factor `i` of every term by f(word), a tensor of `width`
  /// factors, giving a tensor with factors() - 1 + width factors.
  TensorElement map_factor(std::size_t i, std::size_t width,
                           const std::function<TensorElement(const Word&)>& f) const;

  /// Normal form of every factor.
  TensorElement reduce(Reducer& reducer) const;

  std::string render(const Alphabet& alphabet) const;

 private:
  std::size_t factors_;
  TermMap terms_;
};

}  // namespace superrtt
