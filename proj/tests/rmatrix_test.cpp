#include <doctest.h>

#include "generators.hpp"
#include "superrtt/builtins.hpp"
#include "superrtt/rmatrix.hpp"

using namespace superrtt;
using superrtt::testing::Gen;

namespace {

// Plain scalar matrices for the independent oracles below.
using Mat = std::vector<std::vector<Scalar>>;

Mat to_mat(const GradedMatrix& m) {
  Mat r(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m.scalar_at(i, j);
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r(a.size(), std::vector<Scalar>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

bool is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& s : row)
      if (!s.is_zero()) return false;
  return true;
}

Mat sub(Mat a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  return a;
}

int sgn(int e) { return (e & 1) ? -1 : 1; }

// Embeddings written straight from the index formulas, bits 0 = even, 1 = odd.
Mat naive_embed(const Mat& r, int which, bool graded) {
  Mat out(8, std::vector<Scalar>(8));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) {
              Scalar v;
              if (which == 12 && c == f) v = r[2 * a + b][2 * d + e];
              if (which == 13 && b == e) v = Scalar(graded ? sgn(b * (c + f)) : 1) * r[2 * a + c][2 * d + f];
              if (which == 23 && a == d) v = Scalar(graded ? sgn(a * (b + c + e + f)) : 1) * r[2 * b + c][2 * e + f];
              out[4 * a + 2 * b + c][4 * d + 2 * e + f] = v;
            }
  return out;
}

Mat naive_ybe(const Mat& r, bool graded) {
  const Mat r12 = naive_embed(r, 12, graded), r13 = naive_embed(r, 13, graded),
            r23 = naive_embed(r, 23, graded);
  return sub(mul(mul(r12, r13), r23), mul(mul(r23, r13), r12));
}

Mat naive_p() {
  Mat p(4, std::vector<Scalar>(4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (i == l && j == k) p[2 * i + j][2 * k + l] = Scalar(sgn(i * j));
  return p;
}

}  // namespace

TEST_CASE("stated matrices") {
  CHECK(r_h1h2().scalar_at(0, 0) == Scalar(1) - Scalar::h1() * Scalar::h2());
  CHECK(r_h1h2().scalar_at(3, 3) == Scalar(1) + Scalar::h1() * Scalar::h2());
  CHECK(r_h1().scalar_at(1, 0) == -Scalar::h1());
  CHECK(r_h2().scalar_at(0, 1) == -Scalar::h2());
  CHECK(r_pq().scalar_at(0, 0) == Scalar::q());
}

TEST_CASE("super permutation matches the index formula") {
  CHECK(to_mat(permutation()) == naive_p());
  CHECK(permutation().scalar_at(3, 3) == Scalar(-1));
  CHECK(permutation(PermutationSigns::plain).scalar_at(3, 3) == Scalar(1));
}

TEST_CASE("embeddings agree with the index formulas on 100 random matrices") {
  Gen gen(21);
  for (int n = 0; n < 100; ++n) {
    Mat m(4, std::vector<Scalar>(4));
    for (auto& row : m)
      for (auto& s : row) s = gen.simple_scalar();
    const GradedMatrix g = GradedMatrix::from_scalars(tensor_grades(2), m);
    for (bool graded : {true, false}) {
      REQUIRE(to_mat(embed12(g, graded)) == naive_embed(m, 12, graded));
      REQUIRE(to_mat(embed13(g, graded)) == naive_embed(m, 13, graded));
      REQUIRE(to_mat(embed23(g, graded)) == naive_embed(m, 23, graded));
    }
  }
}

TEST_CASE("Yang-Baxter equations, library against the naive oracle") {
  for (bool graded : {true, false}) {
    CHECK(ybe_residual(r_h1(), graded).passed == is_zero(naive_ybe(to_mat(r_h1()), graded)));
    CHECK(ybe_residual(r_h2(), graded).passed == is_zero(naive_ybe(to_mat(r_h2()), graded)));
  }
  CHECK(ybe_residual(r_h1(), true).passed);
  CHECK(ybe_residual(r_h2(), true).passed);
  CHECK(ybe_residual(r_h2(), false).passed);
  CHECK(is_zero(naive_ybe(to_mat(r_h2()), false)));
}

TEST_CASE("braid equations") {
  const GradedMatrix p = permutation();
  CHECK(braid_residual(p * r_h1(), true).passed);
  CHECK(braid_residual(p * r_h2(), true).passed);
  const VerificationReport neg = braid_residual(p * r_h2(), false);
  CHECK(!neg.passed);
  CHECK(neg.nonzero_count() > 0);
}

TEST_CASE("involution and factorization") {
  CHECK(rhat_involution(r_h1h2()).passed);
  CHECK(factorization_check().passed);
  // Oracle: plain product of the two stated matrices, h1 h2 dropped.
  Mat prod = mul(to_mat(r_h1()), to_mat(r_h2()));
  Mat full = to_mat(r_h1h2());
  for (Mat* m : {&prod, &full})
    for (auto& row : *m)
      for (auto& s : row) s = s.without_h1h2();
  CHECK(prod == full);
  // (P R)^2 = I by direct multiplication.
  const Mat pr = mul(naive_p(), to_mat(r_h1h2()));
  CHECK(mul(pr, pr) == to_mat(GradedMatrix::identity(tensor_grades(2))));
}

TEST_CASE("RTT relations") {
  const Presentation& gl = builtin_presentation("GL_pq");
  CHECK(rtt_residual(r_pq(), generator_matrix(gl), gl).passed);
  const Presentation& glh = builtin_presentation("GL_h1h2");
  const VerificationReport rep = rtt_residual(r_h1h2(), generator_matrix(glh), glh);
  CHECK(rep.passed);
  CHECK(rep.residues.size() == 16);
  // With R = I the residual is the matrix of graded commutators.
  const Presentation& fr = builtin_presentation("free_GL");
  const VerificationReport id = rtt_residual(GradedMatrix::identity(tensor_grades(2)), generator_matrix(fr), fr);
  CHECK(!id.passed);
  // R_pq is not an R-matrix for the contracted relations.
  CHECK(!rtt_residual(r_pq(), generator_matrix(glh), glh).passed);
}

TEST_CASE("kronecker sign conventions") {
  const GradedMatrix t = generator_matrix(builtin_presentation("free_GL"));
  CHECK(kronecker(t, t, KroneckerSigns::graded) == t1_of(t) * t2_of(t));
  CHECK(kronecker(t, t, KroneckerSigns::ungraded) != t1_of(t) * t2_of(t));
}

TEST_CASE("inverse of scalar matrices") {
  const GradedMatrix r = r_h1h2();
  CHECK(inverse(r) * r == GradedMatrix::identity(tensor_grades(2)));
  CHECK(r * inverse(r) == GradedMatrix::identity(tensor_grades(2)));
  CHECK(inverse(r_pq()) * r_pq() == GradedMatrix::identity(tensor_grades(2)));
}
