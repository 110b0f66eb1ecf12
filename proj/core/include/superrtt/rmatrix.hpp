#pragma once

#include <string>
#include <vector>

#include "superrtt/matrix.hpp"
#include "superrtt/presentation.hpp"
#include "superrtt/report.hpp"

namespace superrtt {

/// 4x4 and 8x8 tensor indices are flattened row-major with the first index
/// slowest: (11, 12, 21, 22). Index 1 is even and index 2 odd.

/// (T1)^{ij}_{kl} = (-1)^{k(j+l)} T^i_k delta^j_l.
GradedMatrix t1_of(const GradedMatrix& t);
/// (T2)^{ij}_{kl} = (-1)^{i(j+l)} T^j_l delta^i_k.
GradedMatrix t2_of(const GradedMatrix& t);

enum class KroneckerSigns { graded, ungraded };

/// (A x B)^{ij}_{kl} = s * A^i_k B^j_l with s = (-1)^{k(j+l)} when graded,
/// which is the entry pattern of t1_of(A) * t2_of(B).
GradedMatrix kronecker(const GradedMatrix& a, const GradedMatrix& b, KroneckerSigns signs);

enum class PermutationSigns { super, plain };

/// P^{ij}_{kl} = (-1)^{ij} delta^i_l delta^j_k, or without the sign.
GradedMatrix permutation(PermutationSigns signs = PermutationSigns::super);

/// Square scalar matrix from rows of scalar expressions.
GradedMatrix scalar_matrix(const std::vector<std::vector<std::string>>& rows);

GradedMatrix r_pq();
GradedMatrix r_h1h2();
GradedMatrix r_h1();
GradedMatrix r_h2();

/// T = (a beta; gamma d) over the presentation's alphabet.
GradedMatrix generator_matrix(const Presentation& p);

/// Embeddings of a 4x4 matrix into 8x8, with the signs of the graded
/// Yang-Baxter equation when `graded`.
GradedMatrix embed12(const GradedMatrix& r, bool graded);
GradedMatrix embed13(const GradedMatrix& r, bool graded);
GradedMatrix embed23(const GradedMatrix& r, bool graded);

/// Entrywise report of a matrix that should vanish, each entry reduced in `p`
/// when given.
VerificationReport matrix_report(std::string name, const GradedMatrix& residual,
                                 const Alphabet& alphabet, const Presentation* p = nullptr);

VerificationReport rtt_residual(const GradedMatrix& r, const GradedMatrix& t, const Presentation& p);
VerificationReport ybe_residual(const GradedMatrix& r, bool graded);
VerificationReport braid_residual(const GradedMatrix& rhat, bool graded);

/// (P R)^2 - I.
VerificationReport rhat_involution(const GradedMatrix& r,
                                   PermutationSigns signs = PermutationSigns::super);

/// R_{h1,h2} with h1 h2 = 0 against R_{h1} R_{h2}.
VerificationReport factorization_check();

}  // namespace superrtt
