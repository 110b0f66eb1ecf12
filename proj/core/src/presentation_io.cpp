#include "superrtt/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "superrtt/builtins.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/rmatrix.hpp"

namespace superrtt {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw SyntaxError(0, "a directive", "presentation line " + std::to_string(line) + ": " + what);
}

}  // namespace

Presentation read_presentation(std::istream& in) {
  std::string name = "unnamed";
  std::vector<Generator> gens;
  PresentationFlags flags;
  std::vector<std::pair<std::size_t, std::string>> rule_lines;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (key == "name") {
      name = rest;
    } else if (key == "generators") {
      std::istringstream ss(rest);
      std::string tok;
      while (ss >> tok) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) fail(lineno, "generator '" + tok + "' needs :even or :odd");
        const std::string parity = tok.substr(colon + 1);
        if (parity != "even" && parity != "odd") fail(lineno, "unknown parity '" + parity + "'");
        gens.push_back({canonical_identifier(tok.substr(0, colon)),
                        parity == "odd" ? Parity::odd : Parity::even});
      }
    } else if (key == "flags") {
      std::istringstream ss(rest);
      std::string tok;
      while (ss >> tok) {
        if (tok != "assume_h1h2_zero") fail(lineno, "unknown flag '" + tok + "'");
        flags.assume_h1h2_zero = true;
      }
    } else if (key == "rule") {
      rule_lines.emplace_back(lineno, rest);
    } else if (key == "relation") {
      relation_lines.emplace_back(lineno, rest);
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }
  }

  const Alphabet alphabet(gens);
  std::vector<Rule> rules;
  for (const auto& [ln, text] : rule_lines) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) fail(ln, "rule needs '->'");
    const Element lhs = parse_element(text.substr(0, arrow), alphabet);
    const Element rhs = parse_element(text.substr(arrow + 2), alphabet);
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
      fail(ln, "rule lhs must be a single word");
    }
    rules.push_back({lhs.terms().begin()->first, rhs});
  }
  if (relation_lines.empty()) return Presentation(name, alphabet, std::move(rules), flags);

  std::vector<Element> rels;
  for (const auto& r : rules) rels.push_back(Element(r.lhs) - r.rhs);
  for (const auto& [ln, text] : relation_lines) rels.push_back(parse_relation(text, alphabet));
  return orient_relations(name, alphabet, std::move(rels), flags);
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownPresentation("cannot open presentation file '" + path + "'");
  return read_presentation(in);
}

void write_presentation(std::ostream& out, const Presentation& p) {
  const Alphabet& al = p.alphabet();
  out << "name " << p.name() << "\n";
  out << "generators";
  for (const auto& g : al.generators()) {
    out << " " << g.name << (g.parity == Parity::odd ? ":odd" : ":even");
  }
  out << "\n";
  if (p.flags().assume_h1h2_zero) out << "flags assume_h1h2_zero\n";
  for (const auto& r : p.rules()) {
    out << "rule " << al.render(r.lhs) << " -> " << r.rhs.render(al) << "\n";
  }
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream out;
  write_presentation(out, p);
  return out.str();
}

Presentation load_presentation(std::string_view name_or_path) {
  for (const auto& n : builtin_names()) {
    if (n == name_or_path) return builtin_presentation(n);
  }
  std::ifstream probe{std::string(name_or_path)};
  if (!probe) throw UnknownPresentation("unknown presentation '" + std::string(name_or_path) + "'");
  return read_presentation(probe);
}

GradedMatrix parse_matrix_literal(std::string_view text) {
  // Split on brackets and top-level commas; entries may contain parentheses.
  std::vector<std::vector<std::string>> rows;
  int bracket = 0;
  int paren = 0;
  std::string cell;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++paren;
    if (c == ')') --paren;
    if (c == '[') {
      if (++bracket > 2) throw SyntaxError(i, "matrix entry", "nested brackets");
      if (bracket == 2) rows.emplace_back();
      continue;
    }
    if (c == ']') {
      if (bracket == 2) {
        if (trim(cell).empty()) throw SyntaxError(i, "matrix entry", "empty entry");
        rows.back().push_back(trim(cell));
        cell.clear();
      }
      if (--bracket < 0) throw SyntaxError(i, "'['", "unbalanced bracket");
      continue;
    }
    if (c == ',' && paren == 0) {
      if (bracket == 2) {
        rows.back().push_back(trim(cell));
        cell.clear();
      }
      continue;
    }
    if (bracket == 2) {
      cell += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw SyntaxError(i, "'['", "text outside matrix rows");
    }
  }
  if (bracket != 0 || rows.empty()) throw SyntaxError(text.size(), "']'", "unterminated matrix");
  return scalar_matrix(rows);
}

}  // namespace superrtt
