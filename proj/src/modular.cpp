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

#include "framelab/modular.hpp"

#include <stdexcept>

namespace framelab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeEmbedding::PrimeEmbedding(unsigned N, unsigned index) : N_(N) {
  if (N == 0) throw std::invalid_argument("PrimeEmbedding: conductor must be positive");
  u64 k = ((u64{1} << 62) - 1) / N;
  unsigned found = 0;
  for (;; --k) {
    if (k == 0) throw std::runtime_error("PrimeEmbedding: no prime found");
    const u64 cand = k * N + 1;
    if (is_prime_u64(cand) && found++ == index) {
      p_ = cand;
      break;
    }
  }
  const u64 cofactor = (p_ - 1) / N;
  const auto factors = prime_factors(N);
  for (u64 a = 2;; ++a) {
    const u64 g = powmod(a, cofactor, p_);
    bool exact_order = g != 0;
    for (u64 q : factors)
      if (powmod(g, N / q, p_) == 1) exact_order = false;
    if (N == 1) exact_order = (g == 1);
    if (exact_order) {
      root_ = g;
      break;
    }
  }
  const std::size_t degree = CycloField::get(N).degree();
  root_powers_.resize(degree);
  u64 cur = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    root_powers_[i] = cur;
    cur = mulmod(cur, root_, p_);
  }
}

u64 PrimeEmbedding::mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
u64 PrimeEmbedding::pow(u64 a, u64 e) const { return powmod(a, e, p_); }
u64 PrimeEmbedding::inv(u64 a) const { return powmod(a, p_ - 2, p_); }

std::optional<u64> PrimeEmbedding::image(const CycloNum& x) const {
  if (x.conductor() != N_) throw std::invalid_argument("PrimeEmbedding: conductor mismatch");
  const u64 den = mpz_fdiv_ui(x.denominator().get_mpz_t(), p_);
  if (den == 0) return std::nullopt;
  u64 acc = 0;
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    const u64 c = mpz_fdiv_ui(num[i].get_mpz_t(), p_);
    acc += mulmod(c, root_powers_[i], p_);
    if (acc >= p_) acc -= p_;
  }
  return mulmod(acc, inv(den), p_);
}

std::optional<std::vector<u64>> PrimeEmbedding::image(const CycloMatrix& m) const {
  std::vector<u64> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto v = image(m(i, j));
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
  return out;
}

u64 PrimeEmbedding::det(std::vector<u64> a, std::size_t d) const {
  u64 result = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < d; ++j) std::swap(a[pivot * d + j], a[col * d + j]);
      result = p_ - result;
      if (result == p_) result = 0;
    }
    const u64 pv = a[col * d + col];
    result = mulmod(result, pv, p_);
    const u64 pinv = inv(pv);
    for (std::size_t i = col + 1; i < d; ++i) {
      const u64 f = mulmod(a[i * d + col], pinv, p_);
      if (f == 0) continue;
      for (std::size_t j = col; j < d; ++j) {
        const u64 sub = mulmod(f, a[col * d + j], p_);
        u64& x = a[i * d + j];
        x = x >= sub ? x - sub : x + p_ - sub;
      }
    }
  }
  return result;
}

}  // namespace framelab
