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

#ifndef FRAMELAB_RATIONAL_POLY_HPP
#define FRAMELAB_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace framelab {

/// Arbitrary-precision rational; mpq_class keeps numerator and denominator
/// in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class CycloPoly {
 public:
  CycloPoly() = default;
  explicit CycloPoly(std::vector<Rational> coeffs);

  static CycloPoly monomial(std::size_t degree, const Rational& c = 1);
  static CycloPoly constant(const Rational& c);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  CycloPoly& operator+=(const CycloPoly& rhs);
  CycloPoly& operator-=(const CycloPoly& rhs);
  CycloPoly& operator*=(const Rational& c);

  friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
  friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
  friend CycloPoly operator*(CycloPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b; throws std::domain_error when b is zero.
std::pair<CycloPoly, CycloPoly> divmod(const CycloPoly& a, const CycloPoly& b);

struct ExtendedGcd {
  CycloPoly gcd;  // monic, or zero when both inputs are zero
  CycloPoly s;
  CycloPoly t;    // s*a + t*b == gcd
};

ExtendedGcd extended_gcd(const CycloPoly& a, const CycloPoly& b);

unsigned long euler_phi(unsigned long n);

/// The N-th cyclotomic polynomial, obtained by exact division of x^N - 1 by
/// the cyclotomic polynomials of all proper divisors of N. Results are cached.
const CycloPoly& cyclotomic_polynomial(unsigned N);

}  // namespace framelab

#endif  // FRAMELAB_RATIONAL_POLY_HPP
