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

#include "framelab/dihedral.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace framelab {

namespace {

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_order(int n) {
  if (n < 1) throw std::invalid_argument("group order n must be positive");
}

}  // namespace

GroupElement GroupElement::rotation(int k, int n) { return {false, mod(k, n)}; }
GroupElement GroupElement::reflection(int k, int n) { return {true, mod(k, n)}; }

GroupElement element_mul(GroupElement g, GroupElement h, int n) {
  // s r^b = r^(-b) s
  const int b = g.reflect ? -h.power : h.power;
  return {g.reflect != h.reflect, mod(static_cast<long>(g.power) + b, n)};
}

GroupElement element_inverse(GroupElement g, int n) {
  if (g.reflect) return g;
  return {false, mod(-static_cast<long>(g.power), n)};
}

std::vector<GroupElement> enumerate_elements(int n) {
  require_order(n);
  std::vector<GroupElement> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back({false, k});
  for (int k = 0; k < n; ++k) out.push_back({true, k});
  return out;
}

std::size_t element_index(GroupElement g, int n) {
  return static_cast<std::size_t>(g.reflect ? n + g.power : g.power);
}

std::string to_string(GroupElement g) {
  std::string out;
  if (g.power == 1) out = "r";
  else if (g.power > 1) out = "r^" + std::to_string(g.power);
  if (g.reflect) out += "s";
  return out.empty() ? "e" : out;
}

GroupElement parse_element(std::string_view text, int n) {
  require_order(n);
  const std::string original(text);
  auto fail = [&]() -> GroupElement { throw std::invalid_argument("invalid group element: '" + original + "'"); };
  if (text == "e") return {};
  GroupElement g;
  if (!text.empty() && text.front() == 'r') {
    text.remove_prefix(1);
    long k = 1;
    if (!text.empty() && text.front() == '^') {
      text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
      if (ec != std::errc() || ptr == text.data()) return fail();
      text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    }
    g.power = mod(k, n);
  }
  if (text == "s") g.reflect = true;
  else if (!text.empty()) return fail();
  if (original == "r^" || original.empty()) return fail();
  return g;
}

Representation Representation::kappa(int n) {
  require_order(n);
  return {RepKind::Kappa, n, 0};
}

Representation Representation::sigma(int n) {
  require_order(n);
  return {RepKind::Sigma, n, 0};
}

Representation Representation::tau(int n, int j) {
  require_order(n);
  if (j < 1 || j > n - 1 || (n % 2 == 0 && j == n / 2))
    throw std::invalid_argument("tau:" + std::to_string(j) + " is reducible or out of range for n=" +
                                std::to_string(n));
  return {RepKind::Tau, n, j};
}

Representation Representation::character(int n, Character c) {
  require_order(n);
  if ((c == Character::Alternating || c == Character::AlternatingSign) && n % 2 != 0)
    throw std::invalid_argument("alternating characters exist only for even n");
  return {RepKind::Character, n, static_cast<int>(c)};
}

Representation Representation::parse(std::string_view text, int n) {
  if (text == "kappa") return kappa(n);
  if (text == "sigma") return sigma(n);
  if (text.starts_with("tau:")) {
    text.remove_prefix(4);
    int j = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), j);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw std::invalid_argument("invalid tau parameter: '" + std::string(text) + "'");
    return tau(n, j);
  }
  if (text.starts_with("char:")) {
    text.remove_prefix(5);
    if (text == "trivial") return character(n, Character::Trivial);
    if (text == "sign") return character(n, Character::Sign);
    if (text == "alt") return character(n, Character::Alternating);
    if (text == "altsign") return character(n, Character::AlternatingSign);
  }
  throw std::invalid_argument("unknown representation: '" + std::string(text) + "'");
}

int Representation::dim() const {
  switch (kind_) {
    case RepKind::Kappa:
    case RepKind::Sigma:
      return n_;
    case RepKind::Tau:
      return 2;
    case RepKind::Character:
      return 1;
  }
  return 0;
}

std::string Representation::name() const {
  switch (kind_) {
    case RepKind::Kappa:
      return "kappa";
    case RepKind::Sigma:
      return "sigma";
    case RepKind::Tau:
      return "tau:" + std::to_string(param_);
    case RepKind::Character:
      switch (character_kind()) {
        case Character::Trivial:
          return "char:trivial";
        case Character::Sign:
          return "char:sign";
        case Character::Alternating:
          return "char:alt";
        case Character::AlternatingSign:
          return "char:altsign";
      }
  }
  return "?";
}

CycloMatrix rep_matrix(const Representation& rep, GroupElement g) {
  const int n = rep.n();
  const unsigned N = rep.conductor();
  const int k = g.power;
  switch (rep.kind()) {
    case RepKind::Kappa: {
      // (A^k B^e v)(j): A^k maps e_i -> e_{i+k}, B maps e_i -> e_{-i}.
      CycloMatrix m(n, n, N);
      const CycloNum one = CycloNum::one(N);
      for (int i = 0; i < n; ++i) {
        const int src = g.reflect ? mod(-static_cast<long>(i), n) : i;
        m(mod(static_cast<long>(src) + k, n), i) = one;
      }
      return m;
    }
    case RepKind::Sigma: {
      // diag(omega^(j k)) composed with the reflection j -> -j.
      CycloMatrix m(n, n, N);
      for (int row = 0; row < n; ++row) {
        const int col = g.reflect ? mod(-static_cast<long>(row), n) : row;
        m(row, col) = omega_power(n, static_cast<long>(row) * k);
      }
      return m;
    }
    case RepKind::Tau: {
      const long j = rep.tau_index();
      CycloMatrix m(2, 2, N);
      const CycloNum up = omega_power(n, j * k);
      const CycloNum down = omega_power(n, -j * k);
      if (g.reflect) {
        m(0, 1) = up;
        m(1, 0) = down;
      } else {
        m(0, 0) = up;
        m(1, 1) = down;
      }
      return m;
    }
    case RepKind::Character: {
      int r_sign = 1, s_sign = 1;
      switch (rep.character_kind()) {
        case Character::Trivial:
          break;
        case Character::Sign:
          s_sign = -1;
          break;
        case Character::Alternating:
          r_sign = -1;
          break;
        case Character::AlternatingSign:
          r_sign = s_sign = -1;
          break;
      }
      int value = (r_sign < 0 && k % 2 != 0) ? -1 : 1;
      if (g.reflect) value *= s_sign;
      CycloMatrix m(1, 1, N);
      m(0, 0) = CycloNum::rational(N, value);
      return m;
    }
  }
  throw std::logic_error("unreachable representation kind");
}

Eigen::MatrixXcd DftMatrix::normalized_complex() const {
  return unnormalized.to_complex() / std::sqrt(static_cast<double>(scale_root));
}

DftMatrix dft_matrix(int n) {
  require_order(n);
  CycloMatrix f(n, n, conductor_for(n));
  for (int xi = 0; xi < n; ++xi)
    for (int k = 0; k < n; ++k) f(xi, k) = omega_power(n, static_cast<long>(k) * xi);
  return {n, std::move(f), n};
}

bool verify_fab(int n) {
  const CycloMatrix F = dft_matrix(n).unnormalized;
  const CycloMatrix A = rep_matrix(Representation::kappa(n), GroupElement::rotation(1, n));
  const CycloMatrix B = rep_matrix(Representation::kappa(n), GroupElement::reflection(0, n));
  const CycloMatrix A_diag = rep_matrix(Representation::sigma(n), GroupElement::rotation(1, n));
  const CycloMatrix B_diag = rep_matrix(Representation::sigma(n), GroupElement::reflection(0, n));
  return F * A == A_diag * F && F * B == B_diag * F && B_diag == B;
}

std::vector<CycloMatrix> conjugate_representation(const Representation& rep, const CycloMatrix& U) {
  if (!U.is_square() || static_cast<int>(U.rows()) != rep.dim())
    throw std::invalid_argument("conjugate_representation: dimension mismatch");
  const CycloMatrix U_inv = inverse(U);
  std::vector<CycloMatrix> out;
  for (GroupElement g : enumerate_elements(rep.n())) out.push_back(U * rep_matrix(rep, g) * U_inv);
  return out;
}

std::vector<Eigen::MatrixXcd> conjugate_representation(const Representation& rep, const Eigen::MatrixXcd& U) {
  if (U.rows() != U.cols() || U.rows() != rep.dim())
    throw std::invalid_argument("conjugate_representation: dimension mismatch");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(U);
  if (!lu.isInvertible()) throw std::domain_error("conjugate_representation: singular U");
  const Eigen::MatrixXcd U_inv = lu.inverse();
  std::vector<Eigen::MatrixXcd> out;
  for (GroupElement g : enumerate_elements(rep.n())) out.push_back(U * rep_matrix(rep, g).to_complex() * U_inv);
  return out;
}

}  // namespace framelab
