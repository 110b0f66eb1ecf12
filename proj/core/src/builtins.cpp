#include "superrtt/builtins.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "superrtt/calculus.hpp"
#include "superrtt/errors.hpp"
#include "superrtt/hopf.hpp"
#include "superrtt/parser.hpp"

namespace superrtt {

namespace {

constexpr Parity E = Parity::even;
constexpr Parity O = Parity::odd;

}  // namespace

Alphabet plane_alphabet() { return Alphabet({{"x", E}, {"xi", O}}); }
Alphabet dual_plane_alphabet() { return Alphabet({{"eta", O}, {"y", E}}); }

// phi is even and u odd; with the opposite assignment the contraction of the
// exterior plane has a pole at q = 1.
Alphabet exterior_alphabet() { return Alphabet({{"phi", E}, {"u", O}}); }

Alphabet supergroup_alphabet() {
  return Alphabet({{"a", E}, {"beta", O}, {"gamma", O}, {"d", E}});
}

Alphabet calculus_alphabet() {
  return Alphabet({{"x", E}, {"xi", O}, {"phi", E}, {"u", O},
                   {"dx", E}, {"dxi", O}, {"dphi", E}, {"du", O}});
}

Presentation presentation_from_text(std::string name, const Alphabet& alphabet,
                                    const std::vector<std::string>& relations,
                                    PresentationFlags flags) {
  std::vector<Element> rels;
  rels.reserve(relations.size());
  for (const auto& r : relations) rels.push_back(parse_relation(r, alphabet));
  return orient_relations(std::move(name), alphabet, std::move(rels), flags);
}

namespace printed {

const std::vector<std::string> A_p = {"x*xi - p*xi*x = 0", "xi^2 = 0"};
const std::vector<std::string> Astar_q = {"eta^2 = 0", "eta*y - q^-1*y*eta = 0"};
const std::vector<std::string> GL_pq = {
    "a*beta = q*beta*a",   "a*gamma = p*gamma*a", "beta^2 = 0",
    "d*beta = q*beta*d",   "d*gamma = p*gamma*d", "gamma^2 = 0",
    "beta*gamma + p*q^-1*gamma*beta = 0",
    "a*d = d*a + (p - q^-1)*gamma*beta",
};
const std::vector<std::string> A_h1 = {"x*xi = xi*x + h1*x^2", "xi^2 = -h1*x*xi"};
const std::vector<std::string> Astar_h2 = {"eta^2 = -h2*eta*y", "eta*y = y*eta - h2*y^2"};
const std::vector<std::string> GL_h1h2 = {
    "a*beta = beta*a - h2*(a^2 - beta*gamma - a*d)",
    "d*beta = beta*d + h2*(d^2 + beta*gamma - d*a)",
    "a*gamma = gamma*a + h1*(a^2 + gamma*beta - a*d)",
    "d*gamma = gamma*d - h1*(d^2 - gamma*beta - d*a)",
    "beta^2 = h2*beta*(a - d)",
    "gamma^2 = h1*gamma*(d - a)",
    "beta*gamma = -gamma*beta + (h1*beta - h2*gamma)*(d - a)",
    "a*d = d*a + (h1*beta + h2*gamma)*(a - d) - h1*h2*(a^2 - 2*d*a + d^2)",
};
const std::vector<std::string> GL_h1h2_short = [] {
  auto r = GL_h1h2;
  r.back() = "a*d = d*a + h1*beta*(a - d) + h2*(a - d)*gamma";
  return r;
}();
const std::vector<std::string> Lambda_q = {"phi^2 = 0", "phi*u + q^-1*u*phi = 0"};
const std::vector<std::string> Lambda_h2 = {"phi^2 = h2*phi*u", "u*phi + phi*u = -h2*u^2"};
const std::vector<std::string> deriv_coord = {
    "dx*x = 1 + x*dx + h1*x*dxi - h2*xi*dx",
    "dx*xi = xi*dx - h1*(x*dx + xi*dxi)",
    "dxi*x = x*dxi + h2*(x*dx + xi*dxi)",
    "dxi*xi = 1 - xi*dxi - h1*x*dxi + h2*xi*dx",
};
const std::vector<std::string> deriv_dual = {
    "dphi*phi = phi*dphi + h1*phi*du - h2*u*dphi",
    "dphi*u = u*dphi - h1*(phi*dphi + u*du)",
    "du*phi = phi*du + h2*(phi*dphi + u*du)",
    "du*u = -u*du - h1*phi*du + h2*u*dphi",
};
const std::vector<std::string> mixed = {
    "x*phi = phi*x + h2*(u*x - phi*xi)",
    "x*u = u*x + h1*phi*x + h2*u*xi",
    "xi*phi = phi*xi - h1*phi*x + h2*u*xi",
    "xi*u = -u*xi - h1*(phi*xi + u*x)",
};
const std::vector<std::string> deriv_deriv = {
    "dx*dxi = dxi*dx - h2*dx^2",
    "dxi^2 = h2*dxi*dx",
};

}  // namespace printed

namespace {

using Factory = Presentation (*)();

const std::map<std::string, Factory, std::less<>>& factories() {
  static const std::map<std::string, Factory, std::less<>> table = {
      {"A_p", [] { return presentation_from_text("A_p", plane_alphabet(), printed::A_p); }},
      {"Astar_q",
       [] { return presentation_from_text("Astar_q", dual_plane_alphabet(), printed::Astar_q); }},
      {"Lambda_q",
       [] { return presentation_from_text("Lambda_q", exterior_alphabet(), printed::Lambda_q); }},
      {"A_h1", [] { return presentation_from_text("A_h1", plane_alphabet(), printed::A_h1); }},
      {"Astar_h2",
       [] { return presentation_from_text("Astar_h2", dual_plane_alphabet(), printed::Astar_h2); }},
      {"Lambda_h2",
       [] { return presentation_from_text("Lambda_h2", exterior_alphabet(), printed::Lambda_h2); }},
      {"GL_pq",
       [] { return presentation_from_text("GL_pq", supergroup_alphabet(), printed::GL_pq); }},
      {"GL_h1h2",
       [] { return presentation_from_text("GL_h1h2", supergroup_alphabet(), printed::GL_h1h2); }},
      {"GL_h1h2_short",
       [] {
         return presentation_from_text("GL_h1h2_short", supergroup_alphabet(),
                                       printed::GL_h1h2_short);
       }},
      {"GL_h1",
       [] { return specialize(builtin_presentation("GL_h1h2"), false, true, "GL_h1"); }},
      {"GL_h1h2_loc", [] { return localization(); }},
      {"calculus", [] { return calculus_presentation(); }},
      {"free_GL", [] { return Presentation("free_GL", supergroup_alphabet(), {}); }},
  };
  return table;
}

}  // namespace

const Presentation& builtin_presentation(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Presentation>, std::less<>> cache;

  const auto& table = factories();
  auto f = table.find(name);
  if (f == table.end()) throw UnknownPresentation("unknown presentation '" + std::string(name) + "'");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) return *it->second;
  }
  // Built outside the lock: factories may recurse into other built-ins.
  auto p = std::make_unique<Presentation>(f->second());
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(std::string(name), std::move(p));
  return *it->second;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : factories()) out.push_back(name);
  return out;
}

}  // namespace superrtt
