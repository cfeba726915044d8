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

#ifndef FRAMELAB_MINORS_HPP
#define FRAMELAB_MINORS_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "framelab/dihedral.hpp"
#include "framelab/matrix.hpp"

namespace framelab {

enum class Mode { Exact, Float };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Exact determinant by Bareiss fraction-free elimination. Rows are first
/// scaled into Z[zeta_N]; every intermediate pivot is then an algebraic
/// integer and each exact division is performed in the field.
CycloNum det_exact(const CycloMatrix& m);

struct FloatDet {
  std::complex<double> value;
  bool singular;
};

/// Singular iff |det| <= 1e-9 * (product of row 2-norms).
inline constexpr double kFloatSingularRatio = 1e-9;

/// LU with partial pivoting.
FloatDet det_float(const Eigen::MatrixXcd& m);

/// Rows rep(g) v for all g in enumeration order.
struct OrbitMatrix {
  Representation rep;
  std::vector<GroupElement> labels;
  CycloMatrix rows;

  [[nodiscard]] int n() const { return rep.n(); }
  [[nodiscard]] std::size_t dim() const { return rows.cols(); }
};

/// Throws std::invalid_argument when v has the wrong length or conductor.
OrbitMatrix orbit_matrix(const Representation& rep, std::span<const CycloNum> v);

/// Float orbit of v under an arbitrary matrix family (one matrix per element).
Eigen::MatrixXcd orbit_matrix_float(std::span<const Eigen::MatrixXcd> family, const Eigen::VectorXcd& v);

struct CheckOptions {
  /// Certify nonzero determinants through a prime-field image before falling
  /// back to Bareiss; disabling forces every determinant through det_exact.
  bool modular_screen = true;
  /// Worker threads; 0 means FRAMELAB_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

unsigned resolve_threads(unsigned requested);

struct HaarCertificate {
  bool pass = false;
  Mode mode = Mode::Exact;
  std::size_t subsets_checked = 0;
  std::size_t subsets_total = 0;
  std::optional<std::vector<GroupElement>> failing_subset;
  std::optional<std::vector<std::size_t>> failing_rows;
  /// Coefficients c with sum_i c_i row_i = 0 over the failing rows, first
  /// nonzero entry normalized to 1.
  std::vector<CycloNum> kernel_witness;
  std::vector<std::complex<double>> kernel_witness_float;
};

/// Enumerates all d-row subsets lexicographically. On failure the reported
/// subset is the lexicographically least failing one, independent of threading.
HaarCertificate check_haar(const OrbitMatrix& m, Mode mode, const CheckOptions& options = {});

/// Float-mode certification of an arbitrary float orbit (labels per row).
HaarCertificate check_haar_float(std::span<const GroupElement> labels, const Eigen::MatrixXcd& rows,
                                 const CheckOptions& options = {});

/// Nonzero c with c^T m = 0 for a square singular m, or empty when m is
/// nonsingular. Fraction-free echelon form, then back-substitution.
std::vector<CycloNum> left_kernel_vector(const CycloMatrix& m);
std::vector<std::complex<double>> left_kernel_vector(const Eigen::MatrixXcd& m);

struct DependenceCertificate {
  int n = 0;
  std::vector<GroupElement> plus_set;   // r^(2k)
  std::vector<GroupElement> minus_set;  // r^(2k) s
  CycloMatrix lhs;                      // sum A^(2k)
  CycloMatrix rhs;                      // sum A^(2k) B
  bool verified = false;

  [[nodiscard]] std::string identity() const;
};

/// Requires even n > 2; throws std::invalid_argument otherwise.
DependenceCertificate even_dependence_certificate(int n);

/// True when sum_k row(r^(2k)) - sum_k row(r^(2k) s) vanishes exactly, i.e.
/// the coefficients (+1, ..., +1, -1, ..., -1) witness a dependency.
bool even_witness_holds(const OrbitMatrix& m);

struct ChebotarevReport {
  int n = 0;
  Mode mode = Mode::Exact;
  bool all_nonzero = true;
  std::size_t minors_checked = 0;
  std::optional<std::vector<std::size_t>> zero_rows;
  std::optional<std::vector<std::size_t>> zero_cols;
};

/// Checks every square minor of the unnormalized DFT, by size, then rows,
/// then columns in lexicographic order; stops at the first zero minor.
ChebotarevReport chebotarev_check(int n, Mode mode, const CheckOptions& options = {});

enum class PairFormula { RotationRotation, RotationReflection, ReflectionReflection };

std::string to_string(PairFormula f);

struct PairResult {
  GroupElement g;
  GroupElement h;
  CycloNum det;  // det(rep(g) v | rep(h) v), vectors as columns
  bool dependent;
  PairFormula formula;
  /// Closed-form value of the determinant evaluated in floating point.
  std::complex<double> formula_value;
};

struct TauPairReport {
  int n = 0;
  int j = 0;
  std::vector<PairResult> pairs;
  std::size_t dependent_count = 0;

  [[nodiscard]] bool all_independent() const { return dependent_count == 0; }
  [[nodiscard]] const PairResult* first_dependent() const;
};

TauPairReport pair_independence_tau(int n, int j, std::span<const CycloNum> v);

}  // namespace framelab

#endif  // FRAMELAB_MINORS_HPP
