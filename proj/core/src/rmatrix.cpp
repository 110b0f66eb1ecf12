#include "superrtt/rmatrix.hpp"
#include <optional>

#include "superrtt/errors.hpp"
#include "superrtt/parser.hpp"

namespace superrtt {

namespace {

int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

void require_square(const GradedMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(std::string(what) + " needs a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
  }
}

std::string index_label(std::size_t row, std::size_t col, std::size_t digits) {
  auto digits_of = [&](std::size_t v) {
    std::string s(digits, '1');
    for (std::size_t d = 0; d < digits; ++d) {
      if ((v >> (digits - 1 - d)) & 1) s[d] = '2';
    }
    return s;
  };
  return "(" + digits_of(row) + "," + digits_of(col) + ")";
}

std::size_t digits_for(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  return d;
}

}  // namespace

GradedMatrix t1_of(const GradedMatrix& t) {
  require_square(t, 2, "t1_of");
  GradedMatrix r(tensor_grades(2), tensor_grades(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (j != l) continue;
          r.at(2 * i + j, 2 * k + l) = Scalar(sign_of(k * (j + l))) * t.at(i, k);
        }
  return r;
}

GradedMatrix t2_of(const GradedMatrix& t) {
  require_square(t, 2, "t2_of");
  GradedMatrix r(tensor_grades(2), tensor_grades(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (i != k) continue;
          r.at(2 * i + j, 2 * k + l) = Scalar(sign_of(i * (j + l))) * t.at(j, l);
        }
  return r;
}

GradedMatrix kronecker(const GradedMatrix& a, const GradedMatrix& b, KroneckerSigns signs) {
  require_square(a, 2, "kronecker");
  require_square(b, 2, "kronecker");
  GradedMatrix r(tensor_grades(2), tensor_grades(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const int s = signs == KroneckerSigns::graded ? sign_of(k * (j + l)) : 1;
          r.at(2 * i + j, 2 * k + l) = Scalar(s) * (a.at(i, k) * b.at(j, l));
        }
  return r;
}

GradedMatrix permutation(PermutationSigns signs) {
  GradedMatrix r(tensor_grades(2), tensor_grades(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int s = signs == PermutationSigns::super ? sign_of(i * j) : 1;
      r.at(2 * i + j, 2 * j + i) = Element(Scalar(s));
    }
  return r;
}

GradedMatrix scalar_matrix(const std::vector<std::vector<std::string>>& rows) {
  const Alphabet none;
  std::vector<Parity> grades = rows.size() == 2 ? grades_1_1() : tensor_grades(digits_for(rows.size()));
  GradedMatrix m(grades, grades);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("matrix literal is not square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = parse_element(rows[i][j], none);
  }
  if (!m.is_scalar()) throw DimensionError("matrix literal has non-scalar entries");
  return m;
}

GradedMatrix r_pq() {
  return scalar_matrix({{"q", "0", "0", "0"},
                        {"0", "q*p^-1", "0", "0"},
                        {"0", "q - p^-1", "1", "0"},
                        {"0", "0", "0", "p^-1"}});
}

GradedMatrix r_h1h2() {
  return scalar_matrix({{"1 - h1*h2", "-h2", "h2", "0"},
                        {"-h1", "1", "-h1*h2", "h2"},
                        {"h1", "-h1*h2", "1", "h2"},
                        {"0", "h1", "h1", "1 + h1*h2"}});
}

GradedMatrix r_h1() {
  return scalar_matrix({{"1", "0", "0", "0"},
                        {"-h1", "1", "0", "0"},
                        {"h1", "0", "1", "0"},
                        {"0", "h1", "h1", "1"}});
}

GradedMatrix r_h2() {
  return scalar_matrix({{"1", "-h2", "h2", "0"},
                        {"0", "1", "0", "h2"},
                        {"0", "0", "1", "h2"},
                        {"0", "0", "0", "1"}});
}

GradedMatrix generator_matrix(const Presentation& p) {
  const Alphabet& al = p.alphabet();
  GradedMatrix t(grades_1_1(), grades_1_1());
  t.at(0, 0) = Element(Word(1, al.letter("a")));
  t.at(0, 1) = Element(Word(1, al.letter("beta")));
  t.at(1, 0) = Element(Word(1, al.letter("gamma")));
  t.at(1, 1) = Element(Word(1, al.letter("d")));
  return t;
}

GradedMatrix embed12(const GradedMatrix& r, bool) {
  require_square(r, 4, "embed12");
  GradedMatrix m(tensor_grades(3), tensor_grades(3));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e) {
            const int f = c;
            m.at(4 * a + 2 * b + c, 4 * d + 2 * e + f) = r.at(2 * a + b, 2 * d + e);
          }
  return m;
}

GradedMatrix embed13(const GradedMatrix& r, bool graded) {
  require_square(r, 4, "embed13");
  GradedMatrix m(tensor_grades(3), tensor_grades(3));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int f = 0; f < 2; ++f) {
            const int e = b;
            const int s = graded ? sign_of(b * (c + f)) : 1;
            m.at(4 * a + 2 * b + c, 4 * d + 2 * e + f) =
                Scalar(s) * r.at(2 * a + c, 2 * d + f);
          }
  return m;
}

GradedMatrix embed23(const GradedMatrix& r, bool graded) {
  require_square(r, 4, "embed23");
  GradedMatrix m(tensor_grades(3), tensor_grades(3));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e)
          for (int f = 0; f < 2; ++f) {
            const int d = a;
            const int s = graded ? sign_of(a * (b + c + e + f)) : 1;
            m.at(4 * a + 2 * b + c, 4 * d + 2 * e + f) =
                Scalar(s) * r.at(2 * b + c, 2 * e + f);
          }
  return m;
}

VerificationReport matrix_report(std::string name, const GradedMatrix& residual,
                                 const Alphabet& alphabet, const Presentation* p) {
  VerificationReport report;
  report.identity_name = std::move(name);
  const std::size_t digits = digits_for(residual.rows());
  std::optional<Reducer> red;
  if (p) red.emplace(*p);
  for (std::size_t i = 0; i < residual.rows(); ++i) {
    for (std::size_t j = 0; j < residual.cols(); ++j) {
      const Element e = red ? red->reduce(residual.at(i, j)) : residual.at(i, j);
      report.add({index_label(i, j, digits), e.render(alphabet), e.is_zero(), ""});
    }
  }
  return report;
}

VerificationReport rtt_residual(const GradedMatrix& r, const GradedMatrix& t,
                                const Presentation& p) {
  require_square(r, 4, "rtt_residual");
  const GradedMatrix t1 = t1_of(t);
  const GradedMatrix t2 = t2_of(t);
  return matrix_report("R T1 T2 - T2 T1 R in " + p.name(), r * t1 * t2 - t2 * t1 * r,
                       p.alphabet(), &p);
}

VerificationReport ybe_residual(const GradedMatrix& r, bool graded) {
  const GradedMatrix r12 = embed12(r, graded);
  const GradedMatrix r13 = embed13(r, graded);
  const GradedMatrix r23 = embed23(r, graded);
  return matrix_report(std::string(graded ? "graded" : "ungraded") +
                           " Yang-Baxter R12 R13 R23 - R23 R13 R12",
                       r12 * r13 * r23 - r23 * r13 * r12, Alphabet());
}

VerificationReport braid_residual(const GradedMatrix& rhat, bool graded) {
  const GradedMatrix r12 = embed12(rhat, graded);
  const GradedMatrix r23 = embed23(rhat, graded);
  return matrix_report(std::string(graded ? "graded" : "ungraded") +
                           " braid R12 R23 R12 - R23 R12 R23",
                       r12 * r23 * r12 - r23 * r12 * r23, Alphabet());
}

VerificationReport rhat_involution(const GradedMatrix& r, PermutationSigns signs) {
  require_square(r, 4, "rhat_involution");
  const GradedMatrix rhat = permutation(signs) * r;
  return matrix_report("(P R)^2 - I", rhat * rhat - GradedMatrix::identity(tensor_grades(2)),
                       Alphabet());
}

VerificationReport factorization_check() {
  const GradedMatrix lhs = r_h1h2().map([](const Element& e) { return e.without_h1h2(); });
  const GradedMatrix rhs = (r_h1() * r_h2()).map([](const Element& e) { return e.without_h1h2(); });
  return matrix_report("R_h1h2 - R_h1 R_h2 (h1 h2 = 0)", lhs - rhs, Alphabet());
}

}  // namespace superrtt
