#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superrtt/matrix.hpp"
#include "superrtt/presentation.hpp"
#include "superrtt/report.hpp"

namespace superrtt {

/// Index equations of the differential calculus. U = (x, xi), V = (phi, u),
/// partial derivatives (dx, dxi) and (dphi, du).
enum class Family {
  coords,       ///< U^i U^j = Rh1^{ij}_{kl} U^k U^l
  duals,        ///< V^i V^j = -Rh2^{ij}_{kl} V^k V^l
  deriv_coord,  ///< d_j U^i = delta^i_j + R^{ik}_{jl} U^l d_k
  deriv_dual,   ///< d_j V^i = R^{ik}_{jl} V^l d_k
  mixed,        ///< U^i V^j = R^{ij}_{kl} V^k U^l
  deriv_deriv,  ///< d_i d_j = R^{lk}_{ji} d_k d_l
};

inline constexpr Family kAllFamilies[] = {Family::coords,      Family::duals, Family::deriv_coord,
                                          Family::deriv_dual,  Family::mixed, Family::deriv_deriv};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// R-hat = P R_{h1,h2} with h1 h2 = 0.
GradedMatrix calculus_rhat();

/// Expand the index equation over i, j in {1, 2} into relations (each
/// meaning `r = 0`) over calculus_alphabet(), h1 h2 = 0 applied.
/// `rhat` overrides the matrix used for the families that take R_{h1,h2}.
std::vector<Element> expand_index_equation(Family f, const GradedMatrix* rhat = nullptr);

/// The same family as stated in the source, for comparison.
std::vector<Element> expected_family(Family f);

struct FamilyComparison {
  Family family;
  Presentation derived;
  Presentation expected;
  bool equal = false;
  VerificationReport report;  ///< each side's rules reduced by the other
};

FamilyComparison compare_family(Family f);

/// All families combined, oriented with h1 h2 = 0.
Presentation calculus_presentation();

/// Confluence of the combined system up to max_degree (critical pairs whose
/// failure runs into a word with no applicable printed relation are listed
/// as unconstrained and do not fail the check), Leibniz spot checks, the
/// dual plane family against the contracted exterior plane, and the
/// coordinate subalgebra against A_h1.
std::vector<VerificationReport> calculus_consistency(std::size_t max_degree = 3);

}  // namespace superrtt
