#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chevalley/field.hpp"

namespace chev {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const { return a_; }

  IntMatrix operator*(const IntMatrix& b) const;
  IntMatrix operator+(const IntMatrix& b) const;
  bool operator==(const IntMatrix& b) const = default;
  bool is_zero() const;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// Dense square-or-rectangular matrix over a chosen field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_int(const Field& f, const IntMatrix& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& b) const;
  bool operator!=(const Matrix& b) const { return !(*this == b); }

  bool is_identity() const;
  bool is_zero() const;
  bool is_diagonal() const;
  Scalar determinant() const;
  /// Throws FieldError when singular.
  Matrix inverse() const;

  /// Row-major canonical codes (finite fields only).
  std::vector<std::uint8_t> packed() const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0} as the columns of the result.
Matrix nullspace(const Matrix& m);
Matrix transpose(const Matrix& m);

}  // namespace chev
