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

#ifndef FRAMELAB_MATRIX_HPP
#define FRAMELAB_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "framelab/cyclotomic.hpp"

namespace framelab {

/// Dense row-major matrix over Q(zeta_N).
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols, unsigned conductor);

  static CycloMatrix identity(std::size_t n, unsigned conductor);
  static CycloMatrix from_rows(const std::vector<std::vector<CycloNum>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] unsigned conductor() const { return conductor_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<CycloNum> row(std::size_t i) const;
  [[nodiscard]] CycloMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  [[nodiscard]] CycloMatrix select_rows(std::span<const std::size_t> rows) const;
  [[nodiscard]] CycloMatrix transpose() const;
  /// Conjugate transpose.
  [[nodiscard]] CycloMatrix adjoint() const;
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] Eigen::MatrixXcd to_complex() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned conductor_ = 1;
  std::vector<CycloNum> data_;
};

std::vector<CycloNum> operator*(const CycloMatrix& a, std::span<const CycloNum> v);
CycloMatrix matrix_power(const CycloMatrix& m, unsigned k);

/// Gauss-Jordan inverse over the field; throws std::domain_error if singular.
CycloMatrix inverse(const CycloMatrix& m);

}  // namespace framelab

#endif  // FRAMELAB_MATRIX_HPP
