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

#include "framelab/sympoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "framelab/combinatorics.hpp"
#include "framelab/literal.hpp"
#include "framelab/minors.hpp"

namespace framelab {

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::string monomial_text(const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    os << (first ? "" : "*") << 'f' << v;
    if (e[v] > 1) os << '^' << e[v];
    first = false;
  }
  return os.str();
}

/// Sign and magnitude text of a coefficient; `bare_one` drops a unit factor.
std::pair<bool, std::string> coefficient_text(const CycloNum& c, int n, bool bare_one) {
  std::string lit = format_cyclo_literal(c, n);
  const bool simple = lit.find_first_of("+-", 1) == std::string::npos;
  if (!simple) return {false, "(" + lit + ")"};
  const bool negative = lit[0] == '-';
  if (negative) lit.erase(0, 1);
  if (bare_one && lit == "1") lit.clear();
  return {negative, lit};
}

void append_term(std::ostringstream& os, bool first, const std::pair<bool, std::string>& coeff, const std::string& mono) {
  if (first) os << (coeff.first ? "-" : "");
  else os << (coeff.first ? " - " : " + ");
  os << coeff.second;
  if (!mono.empty()) os << (coeff.second.empty() ? "" : "*") << mono;
}

}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t n_vars, const CycloNum& c) {
  MultiPoly p(n_vars, c.conductor());
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t var, const CycloNum& c) {
  if (var >= n_vars) throw std::out_of_range("MultiPoly::variable: index out of range");
  MultiPoly p(n_vars, c.conductor());
  Exponent e(n_vars, 0);
  e[var] = 1;
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_homogeneous(unsigned degree) const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) != degree) return false;
  return true;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Exponent& e, const CycloNum& c) {
  if (e.size() != n_vars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c.conductor() != conductor_) throw std::invalid_argument("MultiPoly: conductor mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::require_compatible(const MultiPoly& other) const {
  if (n_vars_ != other.n_vars_ || conductor_ != other.conductor_)
    throw std::invalid_argument("MultiPoly: incompatible operands");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly out(a.n_vars_, a.conductor_);
  Exponent e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(n_vars_, conductor_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string MultiPoly::to_string(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = monomial_text(it->first);
    append_term(os, first, coefficient_text(it->second, n, !mono.empty()), mono);
    first = false;
  }
  return os.str();
}

CycloNum coefficient_of(const MultiPoly& p, const Exponent& monomial) {
  const auto it = p.terms().find(monomial);
  return it == p.terms().end() ? CycloNum::zero(p.conductor()) : it->second;
}

UniPoly UniPoly::constant(const CycloNum& c) {
  UniPoly p(c.conductor());
  p.coeffs_.push_back(c);
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(unsigned conductor, std::size_t k) {
  UniPoly p(conductor);
  p.coeffs_.assign(k + 1, CycloNum::zero(conductor));
  p.coeffs_[k] = CycloNum::one(conductor);
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.conductor_ != conductor_) throw std::invalid_argument("UniPoly: conductor mismatch");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), CycloNum::zero(conductor_));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("UniPoly: conductor mismatch");
  UniPoly out(a.conductor_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, CycloNum::zero(a.conductor_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

std::string UniPoly::to_string(int n) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    append_term(os, first, coefficient_text(coeffs_[k], n, k > 0), mono);
    first = false;
  }
  return os.str();
}

CycloNum substitute(const MultiPoly& p, std::span<const CycloNum> values) {
  if (values.size() != p.n_vars()) throw std::invalid_argument("substitute: wrong number of values");
  CycloNum acc = CycloNum::zero(p.conductor());
  for (const auto& [e, c] : p.terms()) {
    CycloNum term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned k = 0; k < e[v]; ++k) term *= values[v];
    acc += term;
  }
  return acc;
}

UniPoly substitute(const MultiPoly& p, std::span<const UniPoly> values) {
  if (values.size() != p.n_vars()) throw std::invalid_argument("substitute: wrong number of values");
  UniPoly acc(p.conductor());
  for (const auto& [e, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned k = 0; k < e[v]; ++k) term = term * values[v];
    acc += term;
  }
  return acc;
}

PolyMatrix symbolic_orbit_matrix(std::span<const GroupElement> subset, const Representation& rep) {
  if (rep.kind() != RepKind::Kappa && rep.kind() != RepKind::Sigma)
    throw std::invalid_argument("symbolic_orbit_matrix: representation must be kappa or sigma");
  const std::set<GroupElement> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) throw std::invalid_argument("symbolic_orbit_matrix: repeated element");
  const auto n = static_cast<std::size_t>(rep.n());
  PolyMatrix out;
  for (GroupElement g : subset) {
    const CycloMatrix m = rep_matrix(rep, g);
    std::vector<MultiPoly> row;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly entry(n, rep.conductor());
      for (std::size_t j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) entry += MultiPoly::variable(n, j, m(i, j));
      row.push_back(std::move(entry));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

void require_square(const PolyMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("det_symbolic: matrix not square");
}

MultiPoly cofactor(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (row == m.size()) return MultiPoly::constant(m[0][0].n_vars(), CycloNum::one(m[0][0].conductor()));
  MultiPoly acc(m[0][0].n_vars(), m[0][0].conductor());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (m[row][c].is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MultiPoly term = m[row][c] * cofactor(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

/// det of rows [row, size) restricted to the columns in `mask`.
const MultiPoly& memo_minor(const PolyMatrix& m, std::size_t row, std::uint32_t mask,
                            std::unordered_map<std::uint32_t, MultiPoly>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  MultiPoly acc(m[0][0].n_vars(), m[0][0].conductor());
  if (row == m.size()) {
    acc = MultiPoly::constant(acc.n_vars(), CycloNum::one(acc.conductor()));
  } else {
    std::size_t position = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (!(mask >> c & 1u)) continue;
      if (!m[row][c].is_zero()) {
        MultiPoly term = m[row][c] * memo_minor(m, row + 1, mask & ~(1u << c), memo);
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
  }
  return memo.emplace(mask, std::move(acc)).first->second;
}

PolyMatrix block(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  PolyMatrix out;
  for (std::size_t r : rows) {
    std::vector<MultiPoly> row;
    for (std::size_t c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::size_t> complement(std::span<const std::size_t> idx, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < idx.size() && idx[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace

MultiPoly det_symbolic(const PolyMatrix& m) {
  require_square(m);
  if (m.empty()) throw std::invalid_argument("det_symbolic: empty matrix");
  if (m.size() > 31) throw std::invalid_argument("det_symbolic: matrix too large");
  if (m.size() <= 3) {
    std::vector<std::size_t> cols(m.size());
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return cofactor(m, 0, cols);
  }
  std::unordered_map<std::uint32_t, MultiPoly> memo;
  // The row being expanded is determined by the popcount of the mask, so one
  // table keyed by mask is unambiguous.
  return memo_minor(m, 0, (1u << m.size()) - 1, memo);
}

MultiPoly det_laplace(const PolyMatrix& m, const MinorIndex& t) {
  require_square(m);
  const std::size_t n = m.size();
  if (t.empty() || t.size() > n) throw std::invalid_argument("det_laplace: invalid column block");
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k] >= n || (k > 0 && t[k] <= t[k - 1]))
      throw std::invalid_argument("det_laplace: column block must be strictly increasing and in range");
  const std::size_t p = t.size();
  const auto t_c = complement(t, n);
  const std::size_t t_sum = std::accumulate(t.begin(), t.end(), std::size_t{0});
  MultiPoly acc(m[0][0].n_vars(), m[0][0].conductor());
  for_each_combination(n, p, [&](std::span<const std::size_t> s) {
    const MultiPoly a = det_symbolic(block(m, s, t));
    if (a.is_zero()) return true;
    const auto s_c = complement(s, n);
    const MultiPoly b = p == n ? MultiPoly::constant(a.n_vars(), CycloNum::one(a.conductor()))
                               : det_symbolic(block(m, s_c, t_c));
    const std::size_t s_sum = std::accumulate(s.begin(), s.end(), std::size_t{0});
    if ((s_sum + t_sum) % 2) acc -= a * b;
    else acc += a * b;
    return true;
  });
  return acc;
}

Exponent isolated_monomial(int m, int n) {
  if (n < 2 || m < 1 || m >= n) throw std::invalid_argument("isolated_monomial: requires 1 <= m < n");
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < m; ++k) ++e[static_cast<std::size_t>(k)];
  for (int j = 1; j <= n - m; ++j) ++e[static_cast<std::size_t>(j)];
  return e;
}

namespace {

/// det [omega^(row * power_b)] over the given rows and element powers.
CycloNum dft_block_det(int n, int first_row, std::span<const int> powers) {
  const std::size_t k = powers.size();
  CycloMatrix block(k, k, conductor_for(n));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      block(a, b) = omega_power(n, static_cast<long>(first_row + static_cast<int>(a)) * powers[b]);
  return det_exact(block);
}

}  // namespace

PrimeCaseReport prime_case_audit(int n, std::span<const GroupElement> subset) {
  if (subset.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("prime_case_audit: subset must have n elements");
  PrimeCaseReport report;
  report.subset.assign(subset.begin(), subset.end());
  std::sort(report.subset.begin(), report.subset.end());

  const Representation sigma = Representation::sigma(n);
  report.determinant = det_symbolic(symbolic_orbit_matrix(report.subset, sigma));
  report.homogeneous = report.determinant.is_homogeneous(static_cast<unsigned>(n));
  report.nonzero = !report.determinant.is_zero();

  std::vector<int> rotations, reflections;
  for (GroupElement g : report.subset) (g.reflect ? reflections : rotations).push_back(g.power);
  report.rotations = static_cast<int>(rotations.size());
  const int m = report.rotations;

  if (m == 0 || m == n) {
    report.witness_monomial.assign(static_cast<std::size_t>(n), 1);
    report.predicted = dft_block_det(n, 0, m == n ? rotations : reflections);
  } else {
    report.witness_monomial = isolated_monomial(m, n);
    report.predicted = dft_block_det(n, 0, rotations) * dft_block_det(n, m, reflections);
  }
  report.witness_coefficient = coefficient_of(report.determinant, report.witness_monomial);
  if (report.witness_coefficient == report.predicted) report.sign = 1;
  else if (report.witness_coefficient == -report.predicted) report.sign = -1;
  return report;
}

PartitionSearch inverse_closed_partition_search(int n, int m) {
  if (n < 2 || m < 1 || m >= n) throw std::invalid_argument("inverse_closed_partition_search: requires 1 <= m < n");
  if (n > 30) throw std::invalid_argument("inverse_closed_partition_search: n too large");
  auto closed = [n](std::uint32_t mask) {
    for (int k = 0; k < n; ++k)
      if ((mask >> k & 1u) && !(mask >> ((n - k) % n) & 1u)) return false;
    return true;
  };
  auto members = [n](std::uint32_t mask) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) out.push_back(k);
    return out;
  };
  const std::uint32_t low = (1u << m) - 1;
  const std::uint32_t high = ((1u << n) - 1) & ~low;
  PartitionSearch result;
  for (std::uint32_t b1 = low; b1; b1 = (b1 - 1) & low) {
    if (!closed(b1)) continue;
    for (std::uint32_t b2 = high; b2; b2 = (b2 - 1) & high) {
      if (std::popcount(b1) != std::popcount(b2) || !closed(b2)) continue;
      result.found = true;
      result.witness.emplace(members(b1), members(b2));
      return result;
    }
  }
  return result;
}

}  // namespace framelab
