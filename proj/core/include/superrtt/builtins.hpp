#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superrtt/presentation.hpp"

namespace superrtt {

Alphabet plane_alphabet();         // x < xi
Alphabet dual_plane_alphabet();    // eta < y
Alphabet exterior_alphabet();      // phi < u
Alphabet supergroup_alphabet();    // a < beta < gamma < d
Alphabet calculus_alphabet();      // x < xi < phi < u < dx < dxi < dphi < du

/// Orient relations written in the expression grammar.
Presentation presentation_from_text(std::string name, const Alphabet& alphabet,
                                    const std::vector<std::string>& relations,
                                    PresentationFlags flags = {});

/// Relation sets exactly as stated in the source, in the expression grammar.
/// The calculus families are the expected output of the index equations.
namespace printed {
extern const std::vector<std::string> A_p;
extern const std::vector<std::string> Astar_q;
extern const std::vector<std::string> GL_pq;
extern const std::vector<std::string> A_h1;
extern const std::vector<std::string> Astar_h2;
extern const std::vector<std::string> GL_h1h2;
extern const std::vector<std::string> GL_h1h2_short;
extern const std::vector<std::string> Lambda_q;
extern const std::vector<std::string> Lambda_h2;
extern const std::vector<std::string> deriv_coord;
extern const std::vector<std::string> deriv_dual;
extern const std::vector<std::string> mixed;
extern const std::vector<std::string> deriv_deriv;
}  // namespace printed

/// Built-in presentation by name; throws UnknownPresentation.
/// The returned reference stays valid for the life of the program.
const Presentation& builtin_presentation(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace superrtt
