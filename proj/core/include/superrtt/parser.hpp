#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superrtt/algebra.hpp"

namespace superrtt {

/// Expression tree for the text grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' ['-'] int)?
///   atom   := ident | rational | '(' expr ')'
///
/// where `rational` is `int` or `int/int` written without spaces.
struct Expr {
  enum class Kind { number, ident, sum, product, power };

  Kind kind = Kind::number;
  Rational number;                       // number
  std::string name;                      // ident
  std::vector<std::shared_ptr<const Expr>> children;  // sum, product, power (1 child)
  std::vector<char> ops;                 // sum: '+'/'-' per child; product: '*'/'/' per child
  int exponent = 1;                      // power
  std::size_t offset = 0;                // byte offset in the source text

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws SyntaxError with the byte offset and the expected-token set.
ExprPtr parse_expression(std::string_view text);

/// Inverse of parse_expression on canonical text.
std::string to_string(const Expr& e);

/// Canonical ASCII spelling for Unicode aliases (ξ -> xi, ∂x -> dx, ...);
/// returns the input unchanged when no alias applies.
std::string canonical_identifier(std::string_view name);

/// Evaluate against an alphabet. Identifiers p, q, h1, h2 are scalars;
/// every other identifier must name a generator. Division and negative
/// powers are only defined for invertible scalars.
Element evaluate(const Expr& e, const Alphabet& alphabet);

/// parse_expression + evaluate.
Element parse_element(std::string_view text, const Alphabet& alphabet);

/// Parse a relation `lhs = rhs` or a bare expression meaning `expr = 0`,
/// returning lhs - rhs.
Element parse_relation(std::string_view text, const Alphabet& alphabet);

}  // namespace superrtt
