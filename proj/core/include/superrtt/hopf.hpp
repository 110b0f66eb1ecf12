#pragma once

#include <memory>
#include <vector>

#include "superrtt/matrix.hpp"
#include "superrtt/presentation.hpp"
#include "superrtt/report.hpp"
#include "superrtt/tensor.hpp"

namespace superrtt {

/// Generators a < ainv < beta < gamma < d < dinv.
Alphabet localized_alphabet();

/// The supergroup algebra with formal inverses of a and d. Inverses commute
/// past the other generators by conjugation identities such as
///   x a^{-1} = a^{-1} x - a^{-1} [x, a] a^{-1},
/// with [x, a] replaced by its normal form in the unlocalized algebra.
Presentation localization();

/// Matrix coproduct Delta(t^i_j) = t^i_k (x) t^k_j extended as an algebra
/// map. Throws UnsupportedGenerator for a^{-1} and d^{-1}.
TensorElement coproduct(const Element& e, const Alphabet& alphabet);

/// Algebra map with eps(a) = eps(d) = 1, eps(beta) = eps(gamma) = 0 and
/// eps(a^{-1}) = eps(d^{-1}) = 1.
Scalar counit(const Element& e, const Alphabet& alphabet);

/// Coproduct on the localization. Delta(d^{-1}) is the inverse of Delta(d)
/// as a finite nilpotent expansion; all results are reduced factorwise.
class LocalizedCoproduct {
 public:
  LocalizedCoproduct();

  const Presentation& presentation() const noexcept { return *loc_; }
  TensorElement operator()(const Element& e);
  TensorElement reduce(const TensorElement& t) { return t.reduce(red_); }
  /// Number of terms of the nilpotent series that were nonzero, per inverse.
  std::size_t series_length(char which) const { return which == 'a' ? len_a_ : len_d_; }

 private:
  TensorElement generator(Letter l);
  TensorElement inverse_of(Letter x, Letter xinv, Letter off_left, Letter off_right,
                           std::size_t& length);

  const Presentation* loc_;
  Reducer red_;
  std::vector<std::unique_ptr<TensorElement>> cache_;
  std::size_t len_a_ = 0;
  std::size_t len_d_ = 0;
};

/// D = a d^{-1} - beta d^{-1} gamma d^{-1}.
Element superdet(const Alphabet& localized);

/// The inverse matrix T^{-1} written out over the localization.
GradedMatrix antipode_matrix(const Alphabet& localized);

/// Relation with d^{-1} (no a^{-1}) checked without the localization: every
/// d^{-1} is pushed to the right end using d^{-1} x = x d^{-1} + d^{-1} C_x d^{-1}
/// with C_x the normal form of x d - d x, then the relation is multiplied on
/// the right by a power of d and reduced in the unlocalized algebra.
/// Returns that reduced polynomial (zero iff the relation holds).
Element clear_inverses(const Element& relation);

VerificationReport coproduct_homomorphism();
VerificationReport counit_axioms();
VerificationReport coassociativity();
VerificationReport antipode_check();

/// Superdeterminant identities: the two orderings agree, centrality,
/// multiplicativity of the coproduct and the helper relations.
std::vector<VerificationReport> superdet_suite();

/// The helper relations used for the superdeterminant, as text.
const std::vector<std::string>& helper_relations();

}  // namespace superrtt
