#pragma once

#include <functional>
#include <string>
#include <vector>

#include "superrtt/algebra.hpp"

namespace superrtt {

/// Matrix with algebra-valued entries and (even|odd) row and column grades.
///
/// Scalars embed as multiples of the empty word. Products are ordinary row by
/// column products; every sign comes from the entries themselves.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(std::vector<Parity> row_grades, std::vector<Parity> col_grades);

  static GradedMatrix identity(const std::vector<Parity>& grades);
  static GradedMatrix from_scalars(const std::vector<Parity>& grades,
                                   const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return row_grades_.size(); }
  std::size_t cols() const noexcept { return col_grades_.size(); }
  const std::vector<Parity>& row_grades() const noexcept { return row_grades_; }
  const std::vector<Parity>& col_grades() const noexcept { return col_grades_; }

  Element& at(std::size_t i, std::size_t j) { return entries_.at(i * cols() + j); }
  const Element& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

  /// Entry as a scalar; throws if it contains a nonempty word.
  Scalar scalar_at(std::size_t i, std::size_t j) const;
  bool is_scalar() const;
  bool is_zero() const;

  GradedMatrix map(const std::function<Element(const Element&)>& f) const;

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator*(const Scalar& s, const GradedMatrix& m);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.row_grades_ == b.row_grades_ && a.col_grades_ == b.col_grades_ &&
           a.entries_ == b.entries_;
  }

  std::string render(const Alphabet& alphabet) const;

 private:
  std::vector<Parity> row_grades_;
  std::vector<Parity> col_grades_;
  std::vector<Element> entries_;
};

/// Grades [even, odd] of the (1|1) case.
std::vector<Parity> grades_1_1();

/// Grades of the n-fold tensor index, row-major with the first index slowest.
std::vector<Parity> tensor_grades(std::size_t factors);

/// Inverse of a scalar-valued square matrix by Gauss-Jordan elimination with
/// invertible pivots. Throws DimensionError if no pivot is invertible.
GradedMatrix inverse(const GradedMatrix& m);

}  // namespace superrtt
