#include "superrtt/format.hpp"

namespace superrtt {

namespace {

bool needs_parens(const std::string& s) { return s.find_first_of(" */") != std::string::npos; }

// Renders |term| and reports whether it carries a leading minus.
std::pair<bool, std::string> render_term(const TermText& t) {
  const Poly& num = t.coefficient.numerator();
  const Poly& den = t.coefficient.denominator();
  bool negative = false;
  std::string head;
  if (num.size() == 1) {
    const auto& [exp, coeff] = *num.terms().begin();
    negative = coeff < 0;
    Poly mag = negative ? -num : num;
    head = mag.to_string();
  } else {
    head = "(" + num.to_string() + ")";
  }

  std::string out;
  if (t.monomial.empty()) {
    out = head;
  } else if (head == "1") {
    out = t.monomial;
  } else {
    out = head + "*" + t.monomial;
  }
  if (!den.is_one()) {
    std::string d = den.to_string();
    out += "/" + (needs_parens(d) ? "(" + d + ")" : d);
  }
  return {negative, out};
}

}  // namespace

std::string render_sum(const std::vector<TermText>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    auto [negative, body] = render_term(t);
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace superrtt
