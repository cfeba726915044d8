/*
   Copyright 2026 The framelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "framelab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace framelab {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycloNum::zero(conductor)) {}

CycloMatrix CycloMatrix::identity(std::size_t n, unsigned conductor) {
  CycloMatrix m(n, n, conductor);
  const CycloNum one = CycloNum::one(conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

CycloMatrix CycloMatrix::from_rows(const std::vector<std::vector<CycloNum>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("from_rows: empty matrix");
  CycloMatrix m(rows.size(), rows.front().size(), rows.front().front().conductor());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].conductor() != m.conductor_) throw std::invalid_argument("conductor mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<CycloNum> CycloMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

CycloMatrix CycloMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  CycloMatrix out(rows.size(), cols.size(), conductor_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

CycloMatrix CycloMatrix::select_rows(std::span<const std::size_t> rows) const {
  CycloMatrix out(rows.size(), cols_, conductor_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  return out;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix out(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

CycloMatrix CycloMatrix::adjoint() const {
  CycloMatrix out(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Eigen::MatrixXcd CycloMatrix::to_complex() const {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).to_complex();
  return out;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("conductor mismatch");
  CycloMatrix out(a.rows_, b.cols_, a.conductor_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  CycloMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  CycloMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string CycloMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

std::vector<CycloNum> operator*(const CycloMatrix& a, std::span<const CycloNum> v) {
  if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<CycloNum> out(a.rows(), CycloNum::zero(a.conductor()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

CycloMatrix matrix_power(const CycloMatrix& m, unsigned k) {
  CycloMatrix out = CycloMatrix::identity(m.rows(), m.conductor());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

CycloMatrix inverse(const CycloMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  CycloMatrix a = m;
  CycloMatrix inv = CycloMatrix::identity(n, m.conductor());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const CycloNum scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const CycloNum f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace framelab
