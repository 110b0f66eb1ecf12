#include "superrtt/matrix.hpp"

#include "superrtt/errors.hpp"

namespace superrtt {

namespace {

void require_same_shape(const GradedMatrix& a, const GradedMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string("shape mismatch in matrix ") + op);
  }
}

}  // namespace

GradedMatrix::GradedMatrix(std::vector<Parity> row_grades, std::vector<Parity> col_grades)
    : row_grades_(std::move(row_grades)),
      col_grades_(std::move(col_grades)),
      entries_(row_grades_.size() * col_grades_.size()) {}

GradedMatrix GradedMatrix::identity(const std::vector<Parity>& grades) {
  GradedMatrix m(grades, grades);
  for (std::size_t i = 0; i < grades.size(); ++i) m.at(i, i) = Element(Scalar(1));
  return m;
}

GradedMatrix GradedMatrix::from_scalars(const std::vector<Parity>& grades,
                                        const std::vector<std::vector<Scalar>>& rows) {
  GradedMatrix m(grades, grades);
  if (rows.size() != grades.size()) throw DimensionError("row count does not match grades");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != grades.size()) throw DimensionError("column count does not match grades");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Element(rows[i][j]);
  }
  return m;
}

Scalar GradedMatrix::scalar_at(std::size_t i, std::size_t j) const {
  const Element& e = at(i, j);
  if (e.is_zero()) return Scalar();
  if (e.size() != 1 || !e.terms().begin()->first.empty()) {
    throw DimensionError("matrix entry is not a scalar");
  }
  return e.terms().begin()->second;
}

bool GradedMatrix::is_scalar() const {
  for (const auto& e : entries_) {
    if (e.size() > 1 || (e.size() == 1 && !e.terms().begin()->first.empty())) return false;
  }
  return true;
}

bool GradedMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

GradedMatrix GradedMatrix::map(const std::function<Element(const Element&)>& f) const {
  GradedMatrix r = *this;
  for (auto& e : r.entries_) e = f(e);
  return r;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ in matrix product");
  GradedMatrix r(a.row_grades_, b.col_grades_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Element& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b, "sum");
  GradedMatrix r = a;
  for (std::size_t n = 0; n < r.entries_.size(); ++n) r.entries_[n] += b.entries_[n];
  return r;
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_shape(a, b, "difference");
  GradedMatrix r = a;
  for (std::size_t n = 0; n < r.entries_.size(); ++n) r.entries_[n] -= b.entries_[n];
  return r;
}

GradedMatrix operator*(const Scalar& s, const GradedMatrix& m) {
  GradedMatrix r = m;
  for (auto& e : r.entries_) e = s * e;
  return r;
}

std::string GradedMatrix::render(const Alphabet& alphabet) const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    out += i ? ",\n [" : "[";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out += ", ";
      out += at(i, j).render(alphabet);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<Parity> grades_1_1() { return {Parity::even, Parity::odd}; }

std::vector<Parity> tensor_grades(std::size_t factors) {
  std::vector<Parity> g{Parity::even};
  for (std::size_t f = 0; f < factors; ++f) {
    std::vector<Parity> next;
    for (Parity a : g) {
      for (Parity b : grades_1_1()) {
        next.push_back(static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b)));
      }
    }
    g = std::move(next);
  }
  return g;
}

GradedMatrix inverse(const GradedMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionError("inverse of a non-square matrix");
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.scalar_at(i, j);
    a[i][n + i] = Scalar(1);
  }
  // Row operations are left multiplications, so the result is a left
  // inverse; over a supercommutative ring a one-sided inverse is two-sided.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].component(kOne).is_zero()) ++piv;
    if (piv == n) throw DimensionError("matrix is not invertible");
    std::swap(a[piv], a[col]);
    const Scalar inv = a[col][col].inverse();
    for (auto& x : a[col]) x = inv * x;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  GradedMatrix r(m.col_grades(), m.row_grades());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = Element(a[i][n + j]);
  }
  return r;
}

}  // namespace superrtt
