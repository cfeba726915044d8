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

#ifndef FRAMELAB_COMBINATORICS_HPP
#define FRAMELAB_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace framelab {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. The visitor
/// receives a span of strictly increasing indices and returns false to stop.
template <class Visitor>
void for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(binomial(n, k));
  for_each_combination(n, k, [&](std::span<const std::size_t> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

/// The `index`-th k-subset of {0, ..., n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t c = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block = binomial(n - c - 1, k - i - 1);
      if (index < block) break;
      index -= block;
      ++c;
    }
    out.push_back(c++);
  }
  return out;
}

}  // namespace framelab

#endif  // FRAMELAB_COMBINATORICS_HPP
