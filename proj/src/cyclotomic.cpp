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

#include "framelab/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace framelab {

CycloField::CycloField(unsigned N)
    : conductor_(N), modulus_(cyclotomic_polynomial(N)) {
  degree_ = static_cast<std::size_t>(modulus_.degree());
  powers_.resize(N);
  // x^k mod Phi_N by repeated multiplication with x; Phi_N is monic.
  std::vector<mpz_class> cur(degree_);
  cur[0] = 1;
  std::vector<mpz_class> phi(degree_ + 1);
  for (std::size_t i = 0; i <= degree_; ++i) phi[i] = modulus_.coeffs()[i].get_num();
  for (unsigned k = 0; k < N; ++k) {
    auto& out = powers_[k];
    out.resize(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
      if (!cur[i].fits_slong_p()) throw std::overflow_error("cyclotomic power table overflow");
      out[i] = cur[i].get_si();
    }
    // multiply by x
    mpz_class top = cur[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi[i];
  }
}

const CycloField& CycloField::get(unsigned N) {
  if (N == 0) throw std::invalid_argument("conductor must be positive");
  static std::mutex m;
  static std::map<unsigned, std::unique_ptr<CycloField>> registry;
  std::lock_guard lock(m);
  auto it = registry.find(N);
  if (it == registry.end()) it = registry.emplace(N, std::make_unique<CycloField>(N)).first;
  return *it->second;
}

const std::vector<long>& CycloField::power(long k) const {
  long r = k % static_cast<long>(conductor_);
  if (r < 0) r += conductor_;
  return powers_[static_cast<std::size_t>(r)];
}

namespace {

const CycloField* rational_field() {
  static const CycloField* f = &CycloField::get(1);
  return f;
}

}  // namespace

CycloNum::CycloNum() : field_(rational_field()), num_(1), den_(1) {}

CycloNum::CycloNum(const CycloField* field, std::vector<mpz_class> num, mpz_class den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloNum CycloNum::zero(unsigned N) {
  const CycloField& f = CycloField::get(N);
  return CycloNum(&f, std::vector<mpz_class>(f.degree()), 1);
}

CycloNum CycloNum::one(unsigned N) { return rational(N, 1); }

CycloNum CycloNum::rational(unsigned N, const Rational& q) {
  const CycloField& f = CycloField::get(N);
  std::vector<mpz_class> num(f.degree());
  num[0] = q.get_num();
  return CycloNum(&f, std::move(num), q.get_den());
}

CycloNum CycloNum::root(unsigned N, long k) {
  const CycloField& f = CycloField::get(N);
  const auto& p = f.power(k);
  std::vector<mpz_class> num(p.begin(), p.end());
  return CycloNum(&f, std::move(num), 1);
}

CycloNum CycloNum::from_coeffs(unsigned N, std::span<const Rational> coeffs) {
  const CycloField& f = CycloField::get(N);
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num(f.degree());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    mpz_class scaled = coeffs[k].get_num() * (den / coeffs[k].get_den());
    const auto& p = f.power(static_cast<long>(k));
    for (std::size_t i = 0; i < num.size(); ++i)
      if (p[i] != 0) num[i] += scaled * p[i];
  }
  return CycloNum(&f, std::move(num), std::move(den));
}

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& a : num_) {
    Rational q(a, den_);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

Rational CycloNum::coeff(std::size_t i) const {
  Rational q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

bool CycloNum::is_zero() const {
  for (const auto& a : num_)
    if (a != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycloNum::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& a : num_) a = -a;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& a : num_) {
    if (a == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& a : num_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycloNum::require_same_field(const CycloNum& other) const {
  if (field_ != other.field_)
    throw std::invalid_argument("conductor mismatch: " + std::to_string(conductor()) + " vs " +
                                std::to_string(other.conductor()));
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_submul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.require_same_field(b);
  const std::size_t d = a.num_.size();
  std::vector<mpz_class> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(raw[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& p = a.field_->power(static_cast<long>(k));
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] > 0) mpz_addmul_ui(out[i].get_mpz_t(), raw[k].get_mpz_t(), static_cast<unsigned long>(p[i]));
      else if (p[i] < 0) mpz_submul_ui(out[i].get_mpz_t(), raw[k].get_mpz_t(), static_cast<unsigned long>(-p[i]));
    }
  }
  return CycloNum(a.field_, std::move(out), a.den_ * b.den_);
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q) {
  for (auto& a : num_) a *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& a : out.num_) a = -a;
  return out;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (is_rational()) {
    Rational q(num_[0], den_);
    q.canonicalize();
    return rational(conductor(), 1 / q);
  }
  CycloPoly a(coeffs());
  ExtendedGcd eg = extended_gcd(a, field_->modulus());
  if (eg.gcd.degree() != 0) throw std::logic_error("cyclotomic polynomial is not irreducible?");
  auto [_, s] = divmod(eg.s, field_->modulus());
  return from_coeffs(conductor(), s.coeffs());
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

CycloNum CycloNum::conj() const {
  const std::size_t d = num_.size();
  const long N = static_cast<long>(conductor());
  std::vector<mpz_class> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (num_[k] == 0) continue;
    const auto& p = field_->power(N - static_cast<long>(k));
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] > 0) mpz_addmul_ui(out[i].get_mpz_t(), num_[k].get_mpz_t(), static_cast<unsigned long>(p[i]));
      else if (p[i] < 0) mpz_submul_ui(out[i].get_mpz_t(), num_[k].get_mpz_t(), static_cast<unsigned long>(-p[i]));
    }
  }
  return CycloNum(field_, std::move(out), den_);
}

std::complex<double> CycloNum::to_complex() const {
  const double N = conductor();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    mpq_class q(num_[k], den_);
    q.canonicalize();
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / N;
    acc += q.get_d() * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return acc;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (k == 0) os << mag.get_str();
    else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

unsigned conductor_for(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  return static_cast<unsigned>(std::lcm(n, 4));
}

CycloNum omega_power(int n, long k) {
  const unsigned N = conductor_for(n);
  return CycloNum::root(N, k * static_cast<long>(N / static_cast<unsigned>(n)));
}

CycloNum imaginary_unit(int n) {
  const unsigned N = conductor_for(n);
  return CycloNum::root(N, static_cast<long>(N / 4));
}

}  // namespace framelab
