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

#ifndef FRAMELAB_SYMPOLY_HPP
#define FRAMELAB_SYMPOLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "framelab/cyclotomic.hpp"
#include "framelab/dihedral.hpp"

namespace framelab {

using Exponent = std::vector<unsigned>;

/// Graded-lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over Q(zeta_N) in variables f_0, ..., f_{n_vars-1}.
/// No stored coefficient is zero.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(std::size_t n_vars, unsigned conductor) : n_vars_(n_vars), conductor_(conductor) {}

  static MultiPoly constant(std::size_t n_vars, const CycloNum& c);
  /// c * f_var.
  static MultiPoly variable(std::size_t n_vars, std::size_t var, const CycloNum& c);

  [[nodiscard]] std::size_t n_vars() const { return n_vars_; }
  [[nodiscard]] unsigned conductor() const { return conductor_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] const std::map<Exponent, CycloNum, GradedLex>& terms() const { return terms_; }

  /// Every term has total degree `degree`; the zero polynomial is homogeneous.
  [[nodiscard]] bool is_homogeneous(unsigned degree) const;
  /// -1 for the zero polynomial.
  [[nodiscard]] long total_degree() const;

  void add_term(const Exponent& e, const CycloNum& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in descending graded-lex order, coefficients as cyclotomic
  /// literals for order `n`.
  [[nodiscard]] std::string to_string(int n) const;

 private:
  void require_compatible(const MultiPoly& other) const;

  std::size_t n_vars_ = 0;
  unsigned conductor_ = 1;
  std::map<Exponent, CycloNum, GradedLex> terms_;
};

CycloNum coefficient_of(const MultiPoly& p, const Exponent& monomial);

/// Univariate polynomial over Q(zeta_N), ascending, trimmed.
class UniPoly {
 public:
  explicit UniPoly(unsigned conductor) : conductor_(conductor) {}
  static UniPoly constant(const CycloNum& c);
  /// z^k.
  static UniPoly monomial(unsigned conductor, std::size_t k);

  [[nodiscard]] unsigned conductor() const { return conductor_; }
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<CycloNum>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string(int n) const;

 private:
  void trim();
  unsigned conductor_;
  std::vector<CycloNum> coeffs_;
};

CycloNum substitute(const MultiPoly& p, std::span<const CycloNum> values);
UniPoly substitute(const MultiPoly& p, std::span<const UniPoly> values);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Row i is rep(subset[i]) applied to the symbolic vector (f_0, ..., f_{n-1}).
/// Only the n-dimensional representations (Kappa, Sigma) are accepted.
/// Throws std::invalid_argument on repeated elements.
PolyMatrix symbolic_orbit_matrix(std::span<const GroupElement> subset, const Representation& rep);

/// Strictly increasing 0-based column indices.
using MinorIndex = std::vector<std::size_t>;

/// Full determinant. Cofactor expansion up to order 3; beyond that, expansion
/// along rows with minors memoized by column set.
MultiPoly det_symbolic(const PolyMatrix& m);

/// Laplace expansion along the column block t: the sum over row blocks s of
/// sign * det(M[s, t]) * det(M[s^c, t^c]).
MultiPoly det_laplace(const PolyMatrix& m, const MinorIndex& t);

/// Exponent of prod_{k<m} f_k * prod_{1<=j<=n-m} f_j. Requires 1 <= m < n.
Exponent isolated_monomial(int m, int n);

struct PrimeCaseReport {
  std::vector<GroupElement> subset;
  int rotations = 0;
  bool homogeneous = false;
  bool nonzero = false;
  MultiPoly determinant;
  Exponent witness_monomial;
  CycloNum witness_coefficient;
  /// Product of the two DFT minors (mixed subsets) or the Vandermonde
  /// determinant (pure subsets), computed by det_exact.
  CycloNum predicted;
  /// +1 or -1 when witness_coefficient = sign * predicted; 0 otherwise.
  int sign = 0;
};

/// Symbolic determinant of the Sigma orbit matrix over `subset` and the
/// coefficient that certifies it is not the zero polynomial. For n not prime
/// the report is still produced (used for even-n control cases).
PrimeCaseReport prime_case_audit(int n, std::span<const GroupElement> subset);

struct PartitionSearch {
  bool found = false;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

/// Searches B1 in {0..m-1}, B2 in {m..n-1} of equal nonzero size, each
/// closed under k -> (n - k) mod n. Requires n >= 2 and 1 <= m < n.
PartitionSearch inverse_closed_partition_search(int n, int m);

}  // namespace framelab

#endif  // FRAMELAB_SYMPOLY_HPP
