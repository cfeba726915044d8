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

#ifndef FRAMELAB_MODULAR_HPP
#define FRAMELAB_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "framelab/matrix.hpp"

namespace framelab {

/// Ring homomorphism Q(zeta_N) -> F_p (defined away from denominators
/// divisible by p), sending zeta_N to an element of exact order N in F_p,
/// where p = 1 (mod N) is a prime below 2^62.
///
/// Zero maps to zero, so a nonzero image certifies that the exact value is
/// nonzero. A zero image proves nothing; callers fall back to exact arithmetic.
class PrimeEmbedding {
 public:
  /// `index` selects among the primes p = 1 (mod N) counting down from 2^62.
  explicit PrimeEmbedding(unsigned N, unsigned index = 0);

  [[nodiscard]] std::uint64_t prime() const { return p_; }
  [[nodiscard]] std::uint64_t root() const { return root_; }
  [[nodiscard]] unsigned conductor() const { return N_; }

  /// Image of x, or nullopt when p divides the denominator of x.
  [[nodiscard]] std::optional<std::uint64_t> image(const CycloNum& x) const;

  /// Images of all entries, row-major; nullopt if any entry is unmappable.
  [[nodiscard]] std::optional<std::vector<std::uint64_t>> image(const CycloMatrix& m) const;

  /// Determinant mod p of the square matrix `entries` (row-major, side d).
  [[nodiscard]] std::uint64_t det(std::vector<std::uint64_t> entries, std::size_t d) const;

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  [[nodiscard]] std::uint64_t inv(std::uint64_t a) const;

 private:
  unsigned N_;
  std::uint64_t p_;
  std::uint64_t root_;
  std::vector<std::uint64_t> root_powers_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace framelab

#endif  // FRAMELAB_MODULAR_HPP
