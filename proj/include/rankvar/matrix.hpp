#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/field.hpp"

namespace rankvar {

class NoSolution : public std::runtime_error {
 public:
  NoSolution() : std::runtime_error("linear system has no solution") {}
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, size_t rows, size_t cols);

  static Matrix identity(FieldPtr f, size_t n);
  static Matrix from_rows(FieldPtr f, const std::vector<std::vector<FieldElem>>& rows);
  static Matrix from_ints(FieldPtr f, size_t rows, size_t cols, const std::vector<int64_t>& entries);

  FieldPtr field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElem& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<FieldElem>& data() const { return data_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<size_t>& idx) const;
  Matrix select_cols(const std::vector<size_t>& idx) const;
  Matrix col(size_t j) const { return block(0, j, rows_, 1); }

  std::string str() const;

 private:
  FieldPtr field_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const FieldElem& c, const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned e);
Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);
/// Entries embedded into a field containing a's field.
Matrix change_field(const Matrix& a, FieldPtr target);

/// Reduced row echelon form and pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<size_t> pivots;
};
Echelon echelon(const Matrix& a);

size_t rank(const Matrix& a);
/// Columns form a basis of {x : a x = 0}.
Matrix kernel_basis(const Matrix& a);
/// As above; free_cols[t] is the coordinate where column t is 1 and all other columns are 0,
/// so a vector v in the kernel has coordinates v[free_cols].
Matrix kernel_basis(const Matrix& a, std::vector<size_t>& free_cols);
/// Some x with a x = b, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// As solve, throwing NoSolution.
Matrix solve_or_throw(const Matrix& a, const Matrix& b);
/// Indices of a maximal set of linearly independent columns, chosen greedily left to right.
std::vector<size_t> pivot_columns(const Matrix& a);
Matrix inverse(const Matrix& a);

/// Generic rank over a rational function field, computed by specialisation on
/// a grid large enough to witness every nonzero minor. `upper` stops early
/// once reached. Falls back to elimination when the grid is too large.
size_t ratfunc_rank(const Matrix& a, size_t upper);

}  // namespace rankvar
