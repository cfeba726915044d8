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

#ifndef FRAMELAB_CYCLOTOMIC_HPP
#define FRAMELAB_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "framelab/rational_poly.hpp"

namespace framelab {

/// Shared per-conductor data for Q(zeta_N): the cyclotomic polynomial and the
/// reductions of x^k modulo it for 0 <= k < N. Instances live for the whole
/// program and are never mutated after construction.
class CycloField {
 public:
  static const CycloField& get(unsigned N);

  [[nodiscard]] unsigned conductor() const { return conductor_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const CycloPoly& modulus() const { return modulus_; }
  /// Power-basis coefficients of zeta^k, k reduced mod N.
  [[nodiscard]] const std::vector<long>& power(long k) const;

  explicit CycloField(unsigned N);

 private:
  unsigned conductor_;
  std::size_t degree_;
  CycloPoly modulus_;
  std::vector<std::vector<long>> powers_;
};

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// {1, zeta, ..., zeta^(phi(N)-1)} as integer numerators over one positive
/// common denominator. The representation is canonical: the content of the
/// numerators is coprime to the denominator, and zero has denominator 1.
class CycloNum {
 public:
  /// Zero in Q(zeta_1) = Q.
  CycloNum();

  static CycloNum zero(unsigned N);
  static CycloNum one(unsigned N);
  static CycloNum rational(unsigned N, const Rational& q);
  /// zeta_N^k for any integer k.
  static CycloNum root(unsigned N, long k);
  /// Builds sum c_i zeta^i from arbitrary-length coefficients (reduced mod Phi_N).
  static CycloNum from_coeffs(unsigned N, std::span<const Rational> coeffs);

  [[nodiscard]] unsigned conductor() const { return field_->conductor(); }
  [[nodiscard]] const CycloField& field() const { return *field_; }
  [[nodiscard]] std::size_t degree() const { return num_.size(); }

  /// Power-basis coefficients as reduced rationals; length phi(N).
  [[nodiscard]] std::vector<Rational> coeffs() const;
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const std::vector<mpz_class>& numerators() const { return num_; }
  [[nodiscard]] const mpz_class& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_rational() const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator*=(const Rational& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// Multiplicative inverse via extended gcd against Phi_N; throws
  /// std::domain_error on zero.
  [[nodiscard]] CycloNum inverse() const;
  /// Complex conjugation, the automorphism zeta -> zeta^(N-1).
  [[nodiscard]] CycloNum conj() const;
  /// Numerical value with zeta_N = exp(2 pi i / N).
  [[nodiscard]] std::complex<double> to_complex() const;

  /// Debug rendering in the power basis, e.g. "1/2 - 3*z^2".
  [[nodiscard]] std::string to_string() const;

 private:
  CycloNum(const CycloField* field, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void require_same_field(const CycloNum& other) const;

  const CycloField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

inline CycloNum embed_root(unsigned N, long k) { return CycloNum::root(N, k); }
inline CycloNum inverse(const CycloNum& x) { return x.inverse(); }
inline CycloNum conj(const CycloNum& x) { return x.conj(); }
inline std::complex<double> to_complex_float(const CycloNum& x) { return x.to_complex(); }

/// Conductor used for all order-n computations: lcm(n, 4), so that both
/// omega = exp(2 pi i / n) and i are available.
unsigned conductor_for(int n);
/// omega^k = exp(2 pi i k / n) inside Q(zeta_conductor_for(n)).
CycloNum omega_power(int n, long k);
/// The imaginary unit inside Q(zeta_conductor_for(n)).
CycloNum imaginary_unit(int n);

}  // namespace framelab

#endif  // FRAMELAB_CYCLOTOMIC_HPP
