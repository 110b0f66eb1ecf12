#pragma once

#include <string>
#include <vector>

#include "superrtt/ratfunc.hpp"

namespace superrtt {

/// One summand `coefficient * monomial` awaiting rendering. An empty
/// monomial stands for the unit.
struct TermText {
  RatFunc coefficient;
  std::string monomial;
};

/// Render a sum in the expression grammar, e.g. `x*xi - h1*x^2`.
/// Terms are printed in the order given; an empty list renders as `0`.
std::string render_sum(const std::vector<TermText>& terms);

}  // namespace superrtt
