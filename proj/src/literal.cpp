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

#include "framelab/literal.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace framelab {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad cyclotomic literal '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

CycloNum parse_term(std::string_view term, std::string_view whole, int n) {
  const unsigned N = conductor_for(n);
  bool negative = false;
  std::size_t pos = 0;
  while (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
    if (pos > 0) fail(whole, "repeated sign");
    negative = term[pos] == '-';
    ++pos;
  }
  term.remove_prefix(pos);
  if (term.empty()) fail(whole, "empty term");

  bool seen_rational = false, seen_i = false, seen_w = false;
  Rational q = 1;
  CycloNum value = CycloNum::one(N);
  while (true) {
    const std::size_t star = term.find('*');
    const std::string_view factor = term.substr(0, star);
    if (factor.empty()) fail(whole, "empty factor");
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      if (seen_rational) fail(whole, "two rational factors in one term");
      seen_rational = true;
      const std::size_t slash = factor.find('/');
      const std::string_view num = factor.substr(0, slash);
      const std::string_view den = slash == std::string_view::npos ? "1" : factor.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den)) fail(whole, "malformed rational '" + std::string(factor) + "'");
      const mpz_class d{std::string(den)};
      if (d == 0) fail(whole, "zero denominator");
      q = Rational(mpz_class{std::string(num)}, d);
      q.canonicalize();
    } else if (factor == "i") {
      if (seen_i) fail(whole, "repeated factor i");
      seen_i = true;
      value *= imaginary_unit(n);
    } else if (factor[0] == 'w') {
      if (seen_w) fail(whole, "repeated factor w");
      seen_w = true;
      long k = 1;
      if (factor.size() > 1) {
        if (factor[1] != '^' || !all_digits(factor.substr(2))) fail(whole, "malformed power '" + std::string(factor) + "'");
        if (factor.size() > 12) fail(whole, "power out of range");
        k = std::stol(std::string(factor.substr(2)));
      }
      if (k >= n) fail(whole, "power of w must be below n = " + std::to_string(n));
      value *= omega_power(n, k);
    } else {
      fail(whole, "unknown factor '" + std::string(factor) + "'");
    }
    if (star == std::string_view::npos) break;
    term.remove_prefix(star + 1);
  }
  if (negative) q = -q;
  value *= q;
  return value;
}

}  // namespace

CycloNum parse_cyclo_literal(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_cyclo_literal: n must be positive");
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) fail(text, "empty");

  CycloNum acc = CycloNum::zero(conductor_for(n));
  std::size_t start = 0;
  for (std::size_t p = 1; p <= compact.size(); ++p) {
    const bool boundary = p == compact.size() ||
                          ((compact[p] == '+' || compact[p] == '-') && compact[p - 1] != '+' && compact[p - 1] != '-');
    if (!boundary) continue;
    acc += parse_term(std::string_view(compact).substr(start, p - start), text, n);
    start = p;
  }
  return acc;
}

std::vector<CycloNum> parse_vector_literal(std::string_view text, int n) {
  std::vector<CycloNum> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_cyclo_literal(text.substr(start, comma - start), n));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_cyclo_literal(const CycloNum& x, int n) {
  const unsigned N = conductor_for(n);
  if (x.conductor() != N) throw std::invalid_argument("format_cyclo_literal: conductor does not match n");
  if (x.is_zero()) return "0";
  const long quarter = N / 4, step = N / static_cast<unsigned>(n);
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < x.degree(); ++t) {
    Rational q = x.coeff(t);
    if (q == 0) continue;
    // zeta_N^t = i^a w^k with a in 0..3; a >= 2 folds into the sign.
    long a = 0, k = 0;
    [&] {
      for (a = 0; a < 4; ++a)
        for (k = 0; k < n; ++k)
          if ((a * quarter + k * step - static_cast<long>(t)) % static_cast<long>(N) == 0) return;
    }();
    if (a >= 2) {
      q = -q;
      a -= 2;
    }
    const bool negative = q < 0;
    const Rational mag = abs(q);
    std::string factors;
    if (a == 1) factors += "i";
    if (k > 0) factors += (factors.empty() ? "" : "*") + std::string("w") + (k > 1 ? "^" + std::to_string(k) : "");
    std::string term;
    if (factors.empty()) term = mag.get_str();
    else if (mag == 1) term = factors;
    else term = mag.get_str() + "*" + factors;
    if (first) os << (negative ? "-" : "") << term;
    else os << (negative ? " - " : " + ") << term;
    first = false;
  }
  return os.str();
}

std::string format_vector_literal(std::span<const CycloNum> v, int n) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_cyclo_literal(v[k], n);
  return out;
}

std::vector<CycloNum> random_gaussian_vector(int n, std::size_t dim, std::uint64_t seed) {
  const unsigned N = conductor_for(n);
  const CycloNum i = imaginary_unit(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-10, 10), denominator(1, 10);
  auto draw = [&] {
    const int p = numerator(rng);
    const int q = denominator(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
  };
  while (true) {
    std::vector<CycloNum> v;
    bool nonzero = false;
    for (std::size_t k = 0; k < dim; ++k) {
      const Rational re = draw();
      const Rational im = draw();
      v.push_back(CycloNum::rational(N, re) + i * im);
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) return v;
  }
}

}  // namespace framelab
