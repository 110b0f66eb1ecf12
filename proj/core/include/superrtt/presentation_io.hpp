#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "superrtt/matrix.hpp"
#include "superrtt/presentation.hpp"

namespace superrtt {

/// Text format, one directive per line, `#` starts a comment:
///
///   name A_h1
///   generators x:even xi:odd
///   flags assume_h1h2_zero
///   rule xi*x -> x*xi - h1*x^2
///   relation xi^2 + h1*x*xi
///
/// `rule` lines are taken as oriented. When any `relation` line is present,
/// rules and relations are oriented together.
Presentation read_presentation(std::istream& in);
Presentation read_presentation_file(const std::string& path);
void write_presentation(std::ostream& out, const Presentation& p);
std::string presentation_text(const Presentation& p);

/// Built-in name or path to a presentation file.
Presentation load_presentation(std::string_view name_or_path);

/// Matrix literal such as `[[1, 0], [h1/(p-1), 1]]` with scalar entries.
GradedMatrix parse_matrix_literal(std::string_view text);

}  // namespace superrtt
