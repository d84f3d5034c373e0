#include "chevalley/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace chev {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMatrix IntMatrix::operator+(const IntMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_int(const Field& f, const IntMatrix& m) {
  Matrix r(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r(i, j) = f.from_int(m(i, j));
  return r;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  if (field_ != b.field_) throw FieldError("mixed-field matrix product");
  Matrix c(field_, rows_, b.cols_);
  if (field_.is_finite()) {
    // code-level kernel; avoids Scalar temporaries
    std::vector<std::uint32_t> acc(b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0u);
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint32_t x = (*this)(i, k).code();
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const std::uint32_t y = b(k, j).code();
          if (y != 0) acc[j] = field_.add_code(acc[j], field_.mul_code(x, y));
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (acc[j] != 0) c(i, j) = Scalar(field_, acc[j]);
    }
    return c;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix c = *this;
  for (auto& x : c.a_) x *= s;
  return c;
}

bool Matrix::operator==(const Matrix& b) const {
  return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  Scalar det = field_.one();
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return field_.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix m = *this;
  Matrix inv = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) throw FieldError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Scalar s = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::uint8_t> Matrix::packed() const {
  if (!field_.is_finite() || field_.order() > 256) throw FieldError("packed() needs a finite field with q <= 256");
  std::vector<std::uint8_t> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out[i] = static_cast<std::uint8_t>(a_[i].code());
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Matrix rref(const Matrix& input, std::vector<std::size_t>* pivots) {
  Matrix m = input;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar s = m(row, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  const Field& f = m.field();
  Matrix out(f, m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -r(i, free[k]);
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace chev
