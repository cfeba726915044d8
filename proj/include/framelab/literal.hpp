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

#ifndef FRAMELAB_LITERAL_HPP
#define FRAMELAB_LITERAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "framelab/cyclotomic.hpp"

namespace framelab {

/// Cyclotomic literals for order n:
///
///   literal := term (('+' | '-') term)*
///   term    := ['-'] factor ('*' factor)*
///   factor  := rational | 'i' | 'w' | 'w^' k        (0 <= k < n)
///   rational:= digits ['/' digits]
///
/// with at most one factor of each kind per term. `w` is omega = zeta_n and
/// `i` the imaginary unit; values live in Q(zeta_N), N = lcm(n, 4).
/// Throws std::invalid_argument on malformed input.
CycloNum parse_cyclo_literal(std::string_view text, int n);

/// Comma-separated literals.
std::vector<CycloNum> parse_vector_literal(std::string_view text, int n);

/// Inverse of parse_cyclo_literal: each power-basis term is written as
/// +-q * i^a * w^k with a in {0, 1}.
std::string format_cyclo_literal(const CycloNum& x, int n);
std::string format_vector_literal(std::span<const CycloNum> v, int n);

/// Entries x + y i with x, y independent, each p/q with p uniform in
/// [-10, 10] and q uniform in [1, 10]; the zero vector is redrawn.
std::vector<CycloNum> random_gaussian_vector(int n, std::size_t dim, std::uint64_t seed);

}  // namespace framelab

#endif  // FRAMELAB_LITERAL_HPP
