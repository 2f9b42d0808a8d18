#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hpa/scalar.hpp"

namespace hpa {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over ℚ(δ).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);

/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

/// Solves a·x = b for square invertible a.  Throws SingularMatrix.
std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace hpa
