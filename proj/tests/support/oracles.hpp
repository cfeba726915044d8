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

#ifndef FRAMELAB_TESTS_ORACLES_HPP
#define FRAMELAB_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library beyond
// CycloNum ring operations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "framelab/cyclotomic.hpp"
#include "framelab/matrix.hpp"

namespace oracle {

using framelab::CycloMatrix;
using framelab::CycloNum;
using framelab::Rational;

/// Cofactor expansion along the first row.
inline CycloNum cofactor_det(const CycloMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  CycloNum acc = CycloNum::zero(m.conductor());
  for (std::size_t c = 0; c < n; ++c) {
    CycloMatrix minor(n - 1, n - 1, m.conductor());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    const CycloNum term = m(0, c) * cofactor_det(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// Phi_N coefficients from prod (x - e^{2 pi i k / N}) over gcd(k, N) = 1,
/// rounded to the nearest integer.
inline std::vector<long> numeric_cyclotomic(unsigned N) {
  std::vector<std::complex<double>> p{1.0};
  for (unsigned k = 1; k <= N; ++k) {
    if (std::gcd(k, N) != 1) continue;
    const std::complex<double> root = std::polar(1.0, 2.0 * std::numbers::pi * k / N);
    std::vector<std::complex<double>> next(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= root * p[i];
    }
    p = std::move(next);
  }
  std::vector<long> out;
  for (const auto& c : p) out.push_back(std::lround(c.real()));
  return out;
}

inline Rational small_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Random element of Q(zeta_N) with coefficients p/q, p in [lo, hi], q in [1, max_den].
inline CycloNum random_cyclo(std::mt19937_64& rng, unsigned N, int lo = -10, int hi = 10, int max_den = 1) {
  const std::size_t deg = framelab::CycloField::get(N).degree();
  std::vector<Rational> c;
  for (std::size_t k = 0; k < deg; ++k) c.push_back(small_rational(rng, lo, hi, max_den));
  return CycloNum::from_coeffs(N, c);
}

/// x + y i with small Gaussian-rational parts.
inline CycloNum random_gaussian(std::mt19937_64& rng, unsigned N) {
  return CycloNum::rational(N, small_rational(rng, -10, 10, 10)) +
         CycloNum::root(N, N / 4) * small_rational(rng, -10, 10, 10);
}

inline CycloMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned N, bool gaussian) {
  CycloMatrix m(n, n, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gaussian ? random_gaussian(rng, N) : random_cyclo(rng, N, -5, 5);
  return m;
}

}  // namespace oracle

#endif  // FRAMELAB_TESTS_ORACLES_HPP
