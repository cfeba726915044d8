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

#ifndef FRAMELAB_DIHEDRAL_HPP
#define FRAMELAB_DIHEDRAL_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "framelab/matrix.hpp"

namespace framelab {

/// r^power when reflect is false, r^power s otherwise; 0 <= power < n.
struct GroupElement {
  bool reflect = false;
  int power = 0;

  static GroupElement rotation(int k, int n);
  static GroupElement reflection(int k, int n);

  auto operator<=>(const GroupElement&) const = default;
};

/// Product in D_2n = <r, s | r^n = s^2 = e, srs = r^(n-1)>.
GroupElement element_mul(GroupElement g, GroupElement h, int n);
GroupElement element_inverse(GroupElement g, int n);

/// All 2n elements in the fixed order e, r, ..., r^(n-1), s, rs, ..., r^(n-1)s.
std::vector<GroupElement> enumerate_elements(int n);
/// Position of g in enumerate_elements(n).
std::size_t element_index(GroupElement g, int n);

/// "e", "r", "r^3", "s", "rs", "r^3s".
std::string to_string(GroupElement g);
GroupElement parse_element(std::string_view text, int n);

enum class RepKind { Kappa, Sigma, Tau, Character };

/// One-dimensional representations: values of (r, s).
enum class Character {
  Trivial,          // ( 1,  1)
  Sign,             // ( 1, -1)
  Alternating,      // (-1,  1), n even only
  AlternatingSign,  // (-1, -1), n even only
};

/// A concrete matrix realization of D_2n. Kappa is the permutation action on
/// C^n, Sigma its conjugate by the DFT (diagonal rotations), Tau(j) the
/// two-dimensional irreducibles, Character the one-dimensional ones.
class Representation {
 public:
  static Representation kappa(int n);
  static Representation sigma(int n);
  /// Requires 1 <= j <= n-1 and j != n/2; throws std::invalid_argument.
  static Representation tau(int n, int j);
  /// Alternating characters require even n; throws std::invalid_argument.
  static Representation character(int n, Character c);
  /// Parses "kappa", "sigma", "tau:J", "char:trivial|sign|alt|altsign".
  static Representation parse(std::string_view text, int n);

  [[nodiscard]] RepKind kind() const { return kind_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int dim() const;
  [[nodiscard]] unsigned conductor() const { return conductor_for(n_); }
  [[nodiscard]] int tau_index() const { return param_; }
  [[nodiscard]] Character character_kind() const { return static_cast<Character>(param_); }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Representation(RepKind kind, int n, int param) : kind_(kind), n_(n), param_(param) {}
  RepKind kind_;
  int n_;
  int param_;
};

CycloMatrix rep_matrix(const Representation& rep, GroupElement g);

/// Unnormalized DFT, entry (xi, k) = omega^(k xi). The unitary transform is
/// this matrix times n^(-1/2); exact code keeps the scale symbolic.
struct DftMatrix {
  int n;
  CycloMatrix unnormalized;
  /// Divisor under the square root: F = unnormalized / sqrt(scale_root).
  int scale_root;

  [[nodiscard]] Eigen::MatrixXcd normalized_complex() const;
};

DftMatrix dft_matrix(int n);

/// Checks F A = A' F and F B = B F exactly, where A' = diag(omega^xi).
bool verify_fab(int n);

/// The family g -> U rep(g) U^{-1}, indexed in enumerate_elements order.
std::vector<CycloMatrix> conjugate_representation(const Representation& rep, const CycloMatrix& U);
std::vector<Eigen::MatrixXcd> conjugate_representation(const Representation& rep, const Eigen::MatrixXcd& U);

}  // namespace framelab

#endif  // FRAMELAB_DIHEDRAL_HPP
