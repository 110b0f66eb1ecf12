#pragma once

#include <string>
#include <vector>

#include "superrtt/matrix.hpp"
#include "superrtt/presentation.hpp"
#include "superrtt/report.hpp"
#include "superrtt/rmatrix.hpp"

namespace superrtt {

/// Similarity matrix g of a contraction together with its exact inverse.
struct ContractionMatrix {
  std::string name;
  GradedMatrix g;
  GradedMatrix g_inv;
};

/// g_{h1} = (1 0; h1/(p-1) 1).
ContractionMatrix g_h1();
/// g_{h2} = (1 h2/(q-1); 0 1).
ContractionMatrix g_h2();
/// g = g_{h1} g_{h2}, with inverse g_{h2}^{-1} g_{h1}^{-1}.
ContractionMatrix g_h1h2();
ContractionMatrix g_identity();

/// g from a 2x2 scalar literal; the inverse is computed exactly.
ContractionMatrix contraction_matrix(std::string name, const GradedMatrix& g);

/// Apply h1 -> 0 and/or h2 -> 0 to both g and its inverse.
ContractionMatrix specialize(const ContractionMatrix& c, bool h1_zero, bool h2_zero);

/// Replace each generator by an element (generators without an image stay).
Element substitute(const Element& e, const Alphabet& alphabet,
                   const std::vector<std::pair<std::string, Element>>& images);

/// The source relations hold for primed coordinates U' = g U. Substitutes,
/// orients at generic parameters, takes limit_var -> 1 and re-orients.
/// `coords` names the column vector U in order.
Presentation contract_plane(const Presentation& source, const ContractionMatrix& g,
                            const std::vector<std::string>& coords, Var limit_var,
                            std::string name);

struct SupergroupOptions {
  bool h1_zero = false;
  bool h2_zero = false;
  bool q_first = false;  ///< take q -> 1 before p -> 1
};

/// Relations of GL_{p,q}(1|1) under T' = g T g^{-1}, contracted at p, q -> 1.
Presentation contract_supergroup(const SupergroupOptions& options = {});

/// T' = g T g^{-1} over the free algebra on a, beta, gamma, d.
GradedMatrix conjugated_generators(const ContractionMatrix& g, const Alphabet& alphabet);

struct RMatrixOptions {
  KroneckerSigns signs = KroneckerSigns::graded;
  bool h1_zero = false;
  bool h2_zero = false;
  bool p_first = false;  ///< take p -> 1 before q -> 1
};

/// lim (g x g)^{-1} R_{p,q} (g x g).
GradedMatrix contract_rmatrix(const RMatrixOptions& options = {});

}  // namespace superrtt
