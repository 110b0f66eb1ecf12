#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superrtt/builtins.hpp"
#include "superrtt/calculus.hpp"
#include "superrtt/contraction.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/presentation_io.hpp"
#include "superrtt/rmatrix.hpp"
#include "superrtt/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace superrtt;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kSchema = 1;

json residue_json(const Residue& r) {
  json j{{"label", r.label}, {"residue", r.rendered}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json report_json(const VerificationReport& r) {
  json nonzero = json::array();
  for (const auto& res : r.residues) {
    if (!res.zero) nonzero.push_back(residue_json(res));
  }
  return {{"identity", r.identity_name},
          {"residual_zero", r.passed},
          {"residues_checked", r.residues.size()},
          {"nonzero", nonzero},
          {"notes", r.notes}};
}

void print_report_text(std::ostream& out, const VerificationReport& r, std::size_t max_shown) {
  std::size_t shown = 0;
  for (const auto& res : r.residues) {
    if (res.zero) continue;
    if (shown++ == max_shown) {
      out << "    ... " << r.nonzero_count() - max_shown << " more\n";
      break;
    }
    out << "    " << res.label << ": " << res.rendered;
    if (!res.note.empty()) out << "  [" << res.note << "]";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "    note: " << n << "\n";
}

Presentation with_flags(const Presentation& p, bool h1h2_zero) {
  if (!h1h2_zero || p.flags().assume_h1h2_zero) return p;
  return orient_relations(p.name(), p.alphabet(), p.relations(), PresentationFlags{true});
}

std::optional<GradedMatrix> matrix_argument(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (auto m = named_matrix(text)) return m;
  return parse_matrix_literal(text);
}

struct Args {
  bool json = false;
  bool h1h2_zero = false;

  std::string expr;
  std::string in = "A_h1";

  std::string suite;
  std::string only;
  std::size_t probe_degree = 4;
  std::string matrix;
  bool ungraded = false;
  bool serial = false;
  std::size_t max_shown = 6;

  std::string what;
  std::string source = "A_p";
  bool h1_zero = false;
  bool h2_zero = false;
  bool q_first = false;
  bool p_first = false;
  bool ungraded_kronecker = false;

  std::string family;
  std::string name;
  std::string output;
};

int cmd_reduce(const Args& a) {
  const Presentation p = with_flags(load_presentation(a.in), a.h1h2_zero);
  const Element nf = normal_form(parse_element(a.expr, p.alphabet()), p);
  const std::string text = nf.render(p.alphabet());
  if (a.json) {
    std::cout << json{{"schema", kSchema}, {"presentation", p.name()}, {"input", a.expr},
                      {"normal_form", text}}.dump(2)
              << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kPass;
}

int cmd_verify(const Args& a) {
  SuiteOptions o;
  o.probe_degree = a.probe_degree;
  o.only = a.only;
  o.parallel = !a.serial;
  o.matrix = matrix_argument(a.matrix);
  if (o.matrix) {
    o.matrix_name = a.matrix;
    o.graded = !a.ungraded;
  }
  const auto suites = run_suite(a.suite, o);
  bool all = true;
  for (const auto& s : suites) all = all && s.passed();

  if (a.json) {
    json js = json::array();
    for (const auto& s : suites) {
      json checks = json::array();
      for (const auto& c : s.checks) {
        json j = report_json(c.report);
        j["expect_nonzero"] = c.expect_nonzero;
        j["passed"] = c.passed();
        checks.push_back(std::move(j));
      }
      js.push_back({{"name", s.name}, {"passed", s.passed()}, {"seconds", s.seconds},
                    {"checks", std::move(checks)}});
    }
    std::cout << json{{"schema", kSchema}, {"passed", all}, {"suites", std::move(js)}}.dump(2)
              << "\n";
  } else {
    for (const auto& s : suites) {
      std::cout << "[" << s.name << "] " << (s.passed() ? "pass" : "FAIL") << " ("
                << s.seconds << " s)\n";
      for (const auto& c : s.checks) {
        std::cout << "  " << (c.passed() ? "ok   " : "FAIL ") << c.report.identity_name;
        if (c.expect_nonzero) {
          std::cout << (c.report.passed ? "  [expected nonzero, got zero]"
                                        : "  [expected-negative: residual nonzero]");
        }
        std::cout << "\n";
        if (!c.passed() || c.expect_nonzero) print_report_text(std::cout, c.report, a.max_shown);
      }
    }
    std::cout << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? kPass : kFail;
}

int cmd_contract(const Args& a) {
  if (a.what == "plane") {
    struct Plane {
      const char* source;
      ContractionMatrix (*g)();
      std::vector<std::string> coords;
      Var var;
      const char* target;
    };
    const Plane planes[] = {
        {"A_p", g_h1, {"x", "xi"}, Var::p, "A_h1"},
        {"Astar_q", g_h2, {"eta", "y"}, Var::q, "Astar_h2"},
        {"Lambda_q", g_h2, {"phi", "u"}, Var::q, "Lambda_h2"},
    };
    for (const auto& pl : planes) {
      if (a.source != pl.source) continue;
      const Presentation got =
          contract_plane(builtin_presentation(pl.source), pl.g(), pl.coords, pl.var, pl.target);
      const bool same = got.same_rules(builtin_presentation(pl.target));
      if (a.json) {
        std::cout << json{{"schema", kSchema}, {"source", pl.source}, {"result", presentation_text(got)},
                          {"matches", pl.target}, {"passed", same}}.dump(2)
                  << "\n";
      } else {
        std::cout << presentation_text(got) << "# " << (same ? "equals " : "differs from ")
                  << pl.target << "\n";
      }
      return same ? kPass : kFail;
    }
    throw UnknownPresentation("no plane contraction from '" + a.source +
                              "' (use A_p, Astar_q or Lambda_q)");
  }
  if (a.what == "supergroup") {
    SupergroupOptions opt{a.h1_zero, a.h2_zero, a.q_first};
    const Presentation got = contract_supergroup(opt);
    const char* target = a.h2_zero ? (a.h1_zero ? "" : "GL_h1") : (a.h1_zero ? "" : "GL_h1h2");
    bool same = true;
    if (*target) same = ideals_equal(got, builtin_presentation(target), a.probe_degree);
    if (a.json) {
      json j{{"schema", kSchema}, {"result", presentation_text(got)}};
      if (*target) {
        j["matches"] = target;
        j["passed"] = same;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << presentation_text(got);
      if (*target) std::cout << "# ideal " << (same ? "equals " : "differs from ") << target << "\n";
    }
    return same ? kPass : kFail;
  }
  if (a.what == "rmatrix") {
    RMatrixOptions opt;
    opt.signs = a.ungraded_kronecker ? KroneckerSigns::ungraded : KroneckerSigns::graded;
    opt.h1_zero = a.h1_zero;
    opt.h2_zero = a.h2_zero;
    opt.p_first = a.p_first;
    const GradedMatrix m = contract_rmatrix(opt);
    const GradedMatrix want = a.h1_zero && a.h2_zero ? GradedMatrix::identity(tensor_grades(2))
                              : a.h2_zero           ? r_h1()
                              : a.h1_zero           ? r_h2()
                                                    : r_h1h2();
    const bool same = m == want;
    if (a.json) {
      std::cout << json{{"schema", kSchema}, {"result", m.render(Alphabet())}, {"passed", same}}.dump(2)
                << "\n";
    } else {
      std::cout << m.render(Alphabet()) << "\n# " << (same ? "equals" : "differs from")
                << " the stated matrix\n";
    }
    return same ? kPass : kFail;
  }
  throw UnknownSuite("unknown contraction '" + a.what + "' (use plane, supergroup or rmatrix)");
}

int cmd_expand(const Args& a) {
  const auto f = family_from_name(a.family);
  if (!f) throw UnknownSuite("unknown family '" + a.family + "'");
  const Alphabet al = calculus_alphabet();
  const FamilyComparison c = compare_family(*f);
  std::vector<std::string> rels;
  for (const auto& r : c.derived.rules()) rels.push_back(al.render(r.lhs) + " = " + r.rhs.render(al));
  if (a.json) {
    json j{{"schema", kSchema}, {"family", a.family}, {"relations", rels}, {"matches_stated", c.equal}};
    j["comparison"] = report_json(c.report);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rels) std::cout << r << "\n";
    std::cout << "# " << (c.equal ? "matches" : "differs from") << " the stated relations\n";
    if (!c.equal) print_report_text(std::cout, c.report, a.max_shown);
  }
  return c.equal ? kPass : kFail;
}

int cmd_export(const Args& a) {
  const Presentation p = with_flags(load_presentation(a.name), a.h1h2_zero);
  if (a.output.empty()) {
    write_presentation(std::cout, p);
  } else {
    std::ofstream out(a.output);
    if (!out) throw Error("cannot write " + a.output);
    write_presentation(out, p);
  }
  return kPass;
}

int cmd_presentations(const Args& a) {
  if (a.json) {
    json j = json::array();
    for (const auto& n : builtin_names()) {
      const Presentation& p = builtin_presentation(n);
      j.push_back({{"name", n}, {"generators", p.alphabet().size()}, {"rules", p.rules().size()}});
    }
    std::cout << json{{"schema", kSchema}, {"presentations", j}}.dump(2) << "\n";
  } else {
    for (const auto& n : builtin_names()) std::cout << n << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic checks for h-deformed GL(1|1) and its superplanes"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.json, "Emit a JSON report");

  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression");
  reduce->add_option("expr", a.expr, "Expression, e.g. \"xi*x\"")->required();
  reduce->add_option("--in", a.in, "Built-in presentation name or file")->capture_default_str();
  reduce->add_flag("--assume-h1h2-zero", a.h1h2_zero, "Work modulo h1*h2");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", a.suite, "rtt, ybe, braid, hopf, superdet, contraction, calculus, confluence or all")
      ->required();
  verify->add_option("--only", a.only, "Run only checks with this tag");
  verify->add_option("--probe-degree", a.probe_degree, "Word length for ideal probes")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));
  verify->add_option("--matrix", a.matrix, "ybe/braid: Rpq, Rh1h2, Rh1, Rh2, P, I or a literal");
  verify->add_flag("--ungraded", a.ungraded, "ybe/braid: drop the grading signs");
  verify->add_flag("--serial", a.serial, "Run checks one at a time");
  verify->add_option("--max-residues", a.max_shown, "Nonzero residues shown per check")->capture_default_str();

  auto* contract = app.add_subcommand("contract", "Run a contraction p, q -> 1");
  contract->add_option("what", a.what, "plane, supergroup or rmatrix")->required();
  contract->add_option("--source", a.source, "plane: A_p, Astar_q or Lambda_q")->capture_default_str();
  contract->add_flag("--h1-zero", a.h1_zero, "Set h1 = 0 in the transformation");
  contract->add_flag("--h2-zero", a.h2_zero, "Set h2 = 0 in the transformation");
  contract->add_flag("--q-first", a.q_first, "supergroup: take q -> 1 before p -> 1");
  contract->add_flag("--p-first", a.p_first, "rmatrix: take p -> 1 before q -> 1");
  contract->add_flag("--ungraded-kronecker", a.ungraded_kronecker, "rmatrix: plain Kronecker product");
  contract->add_option("--probe-degree", a.probe_degree, "supergroup: word length for the ideal probe")
      ->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Expand a calculus index equation");
  expand->add_option("--family", a.family, "coords, duals, deriv_coord, deriv_dual, mixed or deriv_deriv")
      ->required();
  expand->add_option("--max-residues", a.max_shown)->capture_default_str();

  auto* exp = app.add_subcommand("export", "Write a presentation in the text format");
  exp->add_option("name", a.name, "Built-in name or file")->required();
  exp->add_option("-o,--output", a.output, "Output file (default stdout)");
  exp->add_flag("--assume-h1h2-zero", a.h1h2_zero, "Work modulo h1*h2");

  auto* list = app.add_subcommand("presentations", "List built-in presentations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(a);
    if (*verify) return cmd_verify(a);
    if (*contract) return cmd_contract(a);
    if (*expand) return cmd_expand(a);
    if (*exp) return cmd_export(a);
    if (*list) return cmd_presentations(a);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
