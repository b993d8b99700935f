#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ggsp/error.hpp"

namespace ggsp {

// Dense row-major matrix of doubles. Small and unclever on purpose: the
// heavy lifting (eigendecomposition, big products) goes through LAPACK in
// the spectral module; everything else is O(k^3) at tiny k.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  bool operator==(const Matrix&) const = default;

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) fail(errc::invalid_argument, "matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const double a = (*this)(i, k);
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      fail(errc::invalid_argument, "matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      fail(errc::invalid_argument, "matrix difference: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

  Matrix scaled(double a) const {
    Matrix out = *this;
    for (double& v : out.data_) v *= a;
    return out;
  }

  std::vector<double> matvec(const std::vector<double>& x) const {
    if (x.size() != cols_) fail(errc::invalid_argument, "matvec: length mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const double* r = row(i);
      double acc = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  // max |A - A^T| entry; 0 for exactly symmetric
  double asymmetry() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double weighted_dot(const std::vector<double>& w, const double* a,
                           const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

inline double weighted_dot(const std::vector<double>& w, const std::vector<double>& a,
                           const std::vector<double>& b) {
  return weighted_dot(w, a.data(), b.data(), a.size());
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace ggsp
