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

#include "framelab/rational_poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace framelab {

CycloPoly::CycloPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CycloPoly CycloPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return CycloPoly(std::move(v));
}

CycloPoly CycloPoly::constant(const Rational& c) { return CycloPoly({c}); }

Rational CycloPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void CycloPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

CycloPoly& CycloPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycloPoly(std::move(out));
}

std::string CycloPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) os << (mag != 1 ? "*x" : "x");
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::pair<CycloPoly, CycloPoly> divmod(const CycloPoly& a, const CycloPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {CycloPoly{}, a};
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const Rational& lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {CycloPoly(std::move(quot)), CycloPoly(std::move(rem))};
}

ExtendedGcd extended_gcd(const CycloPoly& a, const CycloPoly& b) {
  CycloPoly r0 = a, r1 = b;
  CycloPoly s0 = CycloPoly::constant(1), s1;
  CycloPoly t0, t1 = CycloPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    CycloPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    CycloPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv_lead = 1 / r0.leading();
  return {r0 * inv_lead, s0 * inv_lead, t0 * inv_lead};
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// Caller holds phi_mutex().
const CycloPoly& cyclotomic_locked(unsigned N, std::map<unsigned, std::unique_ptr<CycloPoly>>& cache) {
  if (auto it = cache.find(N); it != cache.end()) return *it->second;
  // x^N - 1
  std::vector<Rational> xn(N + 1);
  xn[0] = -1;
  xn[N] = 1;
  CycloPoly acc(std::move(xn));
  for (unsigned d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    auto [q, r] = divmod(acc, cyclotomic_locked(d, cache));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    acc = std::move(q);
  }
  auto [it, _] = cache.emplace(N, std::make_unique<CycloPoly>(std::move(acc)));
  return *it->second;
}

}  // namespace

const CycloPoly& cyclotomic_polynomial(unsigned N) {
  if (N == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  static std::map<unsigned, std::unique_ptr<CycloPoly>> cache;
  std::lock_guard lock(phi_mutex());
  return cyclotomic_locked(N, cache);
}

}  // namespace framelab
