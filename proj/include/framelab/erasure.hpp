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

#ifndef FRAMELAB_ERASURE_HPP
#define FRAMELAB_ERASURE_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "framelab/minors.hpp"

namespace framelab {

// Everything here is floating point. Frame vectors are the orbit rows u_k and
// <x, y> = sum_j x_j conj(y_j).

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;

  [[nodiscard]] bool is_frame() const { return lower > 0.0; }
};

/// Extreme eigenvalues of the frame operator sum_k u_k u_k^H.
FrameBounds frame_bounds(const Eigen::MatrixXcd& rows);
FrameBounds frame_bounds(const OrbitMatrix& m);

/// c_k = <u, u_k>.
Eigen::VectorXcd encode(const Eigen::MatrixXcd& rows, const Eigen::VectorXcd& u);

/// Surviving system is singular iff sigma_min <= 1e-10 * sigma_max.
inline constexpr double kSingularValueRatio = 1e-10;

struct ErasureReport {
  std::vector<std::size_t> pattern;  // erased row indices, increasing
  double condition = 0.0;            // infinity when singular
  double error = 0.0;                // ||u_hat - u|| / ||u||; infinity when singular
  bool singular = false;
};

/// Drops the rows in `pattern` and recovers u from the surviving coefficients
/// by an SVD least-squares solve.
ErasureReport erase_and_reconstruct(const Eigen::MatrixXcd& rows, const Eigen::VectorXcd& u,
                                    std::span<const std::size_t> pattern);

struct ErasureAudit {
  std::vector<ErasureReport> reports;  // lexicographic order of surviving rows
  double worst_error = 0.0;            // over nonsingular patterns
  double worst_condition = 0.0;        // over nonsingular patterns
  std::size_t singular_patterns = 0;
};

/// Every maximal pattern: all ways of erasing 2n - d rows. `u` defaults to a
/// seeded random vector when empty.
ErasureAudit exhaustive_erasure_audit(const Eigen::MatrixXcd& rows, Eigen::VectorXcd u = {}, unsigned threads = 0);

/// Deterministic complex test vector with entries uniform in [-1, 1] + [-1, 1]i.
Eigen::VectorXcd seeded_test_vector(std::size_t dim, std::uint64_t seed);

/// "pattern;condition;error", one row per report; patterns as comma-joined
/// element labels.
void write_erasure_csv(std::ostream& os, const ErasureAudit& audit, std::span<const GroupElement> labels);

}  // namespace framelab

#endif  // FRAMELAB_ERASURE_HPP
