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

#include "framelab/minors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "framelab/combinatorics.hpp"
#include "framelab/modular.hpp"

namespace framelab {

std::string to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::Exact;
  if (text == "float") return Mode::Float;
  throw std::invalid_argument("unknown mode: '" + std::string(text) + "'");
}

CycloNum det_exact(const CycloMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_exact: matrix not square");
  const std::size_t n = m.rows();
  const unsigned N = m.conductor();
  if (n == 0) return CycloNum::one(N);

  CycloMatrix a = m;
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).denominator().get_mpz_t());
    if (row_lcm == 1) continue;
    const Rational factor(row_lcm);
    for (std::size_t j = 0; j < n; ++j) a(i, j) *= factor;
    scale *= row_lcm;
  }

  bool negate = false;
  CycloNum prev_inv = CycloNum::one(N);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return CycloNum::zero(N);
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    const CycloNum& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const CycloNum lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        CycloNum t = pivot * a(i, j);
        if (!lead.is_zero() && !a(k, j).is_zero()) t -= lead * a(k, j);
        a(i, j) = prev_inv.is_one() ? std::move(t) : t * prev_inv;
      }
    }
    prev_inv = pivot.inverse();
  }
  CycloNum det = a(n - 1, n - 1);
  if (negate) det = -det;
  if (scale != 1) det *= Rational(mpz_class(1), scale);
  return det;
}

FloatDet det_float(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_float: matrix not square");
  if (m.rows() == 0) return {1.0, false};
  const std::complex<double> det = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
  double hadamard = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) hadamard *= m.row(i).norm();
  return {det, std::abs(det) <= kFloatSingularRatio * hadamard};
}

OrbitMatrix orbit_matrix(const Representation& rep, std::span<const CycloNum> v) {
  if (static_cast<int>(v.size()) != rep.dim())
    throw std::invalid_argument("orbit_matrix: vector length " + std::to_string(v.size()) +
                                " does not match representation dimension " + std::to_string(rep.dim()));
  for (const auto& x : v)
    if (x.conductor() != rep.conductor()) throw std::invalid_argument("orbit_matrix: conductor mismatch");
  OrbitMatrix out{rep, enumerate_elements(rep.n()), CycloMatrix(2 * rep.n(), rep.dim(), rep.conductor())};
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    const auto image = rep_matrix(rep, out.labels[i]) * v;
    for (std::size_t j = 0; j < image.size(); ++j) out.rows(i, j) = image[j];
  }
  return out;
}

Eigen::MatrixXcd orbit_matrix_float(std::span<const Eigen::MatrixXcd> family, const Eigen::VectorXcd& v) {
  if (family.empty()) throw std::invalid_argument("orbit_matrix_float: empty family");
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(family.size()), v.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].cols() != v.size()) throw std::invalid_argument("orbit_matrix_float: dimension mismatch");
    out.row(static_cast<Eigen::Index>(i)) = (family[i] * v).transpose();
  }
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FRAMELAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

/// Smallest index in [0, total) for which `fails` holds, or total. Indices
/// are handed out in increasing order, so every index below the current
/// best is always examined and the result does not depend on scheduling.
template <class Fails>
std::size_t first_failure(std::size_t total, unsigned threads, Fails&& fails) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{total};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total || i >= best.load()) return;
        if (!fails(i)) continue;
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return best.load();
}

std::vector<GroupElement> labels_for(std::span<const GroupElement> labels, std::span<const std::size_t> rows) {
  std::vector<GroupElement> out;
  for (std::size_t r : rows) out.push_back(labels[r]);
  return out;
}

}  // namespace

std::vector<CycloNum> left_kernel_vector(const CycloMatrix& m) {
  CycloMatrix t = m.transpose();
  const std::size_t rows = t.rows(), cols = t.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && t(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(t(p, j), t(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (t(i, c).is_zero()) continue;
      const CycloNum lead = t(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        CycloNum v = t(r, c) * t(i, j);
        if (!t(r, j).is_zero()) v -= lead * t(r, j);
        t(i, j) = std::move(v);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() == cols) return {};

  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivot_cols.size() && pivot_cols[k] == free_col; ++k) ++free_col;
  std::vector<CycloNum> x(cols, CycloNum::zero(m.conductor()));
  x[free_col] = CycloNum::one(m.conductor());
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    CycloNum s = CycloNum::zero(m.conductor());
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (!x[j].is_zero() && !t(k, j).is_zero()) s += t(k, j) * x[j];
    x[pc] = -(s * t(k, pc).inverse());
  }
  for (const auto& v : x) {
    if (v.is_zero()) continue;
    const CycloNum scale = v.inverse();
    for (auto& y : x) y *= scale;
    break;
  }
  return x;
}

std::vector<std::complex<double>> left_kernel_vector(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.transpose(), Eigen::ComputeFullV);
  const Eigen::VectorXcd v = svd.matrixV().col(svd.matrixV().cols() - 1);
  const double cutoff = 1e-9 * v.cwiseAbs().maxCoeff();
  std::complex<double> scale = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > cutoff) {
      scale = v(i);
      break;
    }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i) / scale;
  return out;
}

HaarCertificate check_haar(const OrbitMatrix& m, Mode mode, const CheckOptions& options) {
  if (mode == Mode::Float) return check_haar_float(m.labels, m.rows.to_complex(), options);

  const std::size_t total_rows = m.rows.rows();
  const std::size_t d = m.dim();
  if (total_rows < d) throw std::invalid_argument("check_haar: fewer rows than the dimension");
  const std::size_t total = binomial(total_rows, d);

  std::optional<PrimeEmbedding> embedding;
  std::optional<std::vector<std::uint64_t>> image;
  if (options.modular_screen) {
    embedding.emplace(m.rows.conductor());
    image = embedding->image(m.rows);
  }

  auto singular = [&](std::size_t index) {
    const auto rows = unrank_combination(total_rows, d, index);
    if (image) {
      std::vector<std::uint64_t> sub;
      sub.reserve(d * d);
      for (std::size_t r : rows)
        for (std::size_t j = 0; j < d; ++j) sub.push_back((*image)[r * d + j]);
      if (embedding->det(std::move(sub), d) != 0) return false;
    }
    return det_exact(m.rows.select_rows(rows)).is_zero();
  };

  HaarCertificate cert;
  cert.mode = Mode::Exact;
  cert.subsets_total = total;
  const std::size_t fail = first_failure(total, resolve_threads(options.threads), singular);
  if (fail == total) {
    cert.pass = true;
    cert.subsets_checked = total;
    return cert;
  }
  const auto rows = unrank_combination(total_rows, d, fail);
  cert.subsets_checked = fail + 1;
  cert.failing_rows = rows;
  cert.failing_subset = labels_for(m.labels, rows);
  cert.kernel_witness = left_kernel_vector(m.rows.select_rows(rows));
  return cert;
}

HaarCertificate check_haar_float(std::span<const GroupElement> labels, const Eigen::MatrixXcd& rows,
                                 const CheckOptions& options) {
  const auto total_rows = static_cast<std::size_t>(rows.rows());
  const auto d = static_cast<std::size_t>(rows.cols());
  if (labels.size() != total_rows) throw std::invalid_argument("check_haar_float: label count mismatch");
  if (total_rows < d) throw std::invalid_argument("check_haar_float: fewer rows than the dimension");
  const std::size_t total = binomial(total_rows, d);

  auto gather = [&](std::span<const std::size_t> subset) {
    Eigen::MatrixXcd sub(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < subset.size(); ++i)
      sub.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(subset[i]));
    return sub;
  };
  auto singular = [&](std::size_t index) {
    return det_float(gather(unrank_combination(total_rows, d, index))).singular;
  };

  HaarCertificate cert;
  cert.mode = Mode::Float;
  cert.subsets_total = total;
  const std::size_t fail = first_failure(total, resolve_threads(options.threads), singular);
  if (fail == total) {
    cert.pass = true;
    cert.subsets_checked = total;
    return cert;
  }
  const auto subset = unrank_combination(total_rows, d, fail);
  cert.subsets_checked = fail + 1;
  cert.failing_rows = subset;
  cert.failing_subset = labels_for(labels, subset);
  cert.kernel_witness_float = left_kernel_vector(gather(subset));
  return cert;
}

std::string DependenceCertificate::identity() const {
  std::ostringstream lhs_text, rhs_text;
  for (std::size_t k = 0; k < plus_set.size(); ++k) {
    const int p = plus_set[k].power;
    const std::string a = p == 0 ? "" : (p == 1 ? "A" : "A^" + std::to_string(p));
    lhs_text << (k ? " + " : "") << (a.empty() ? "I" : a);
    rhs_text << (k ? " + " : "") << (a.empty() ? "B" : a + "B");
  }
  return lhs_text.str() + " = " + rhs_text.str();
}

DependenceCertificate even_dependence_certificate(int n) {
  if (n <= 2 || n % 2 != 0) throw std::invalid_argument("even_dependence_certificate: n must be even and > 2");
  const Representation kappa = Representation::kappa(n);
  DependenceCertificate cert;
  cert.n = n;
  cert.lhs = CycloMatrix(n, n, kappa.conductor());
  cert.rhs = CycloMatrix(n, n, kappa.conductor());
  for (int k = 0; 2 * k <= n - 2; ++k) {
    const GroupElement plus = GroupElement::rotation(2 * k, n);
    const GroupElement minus = GroupElement::reflection(2 * k, n);
    cert.plus_set.push_back(plus);
    cert.minus_set.push_back(minus);
    cert.lhs = cert.lhs + rep_matrix(kappa, plus);
    cert.rhs = cert.rhs + rep_matrix(kappa, minus);
  }
  cert.verified = cert.lhs == cert.rhs;
  return cert;
}

bool even_witness_holds(const OrbitMatrix& m) {
  const int n = m.n();
  if (n % 2 != 0) return false;
  std::vector<CycloNum> acc(m.dim(), CycloNum::zero(m.rows.conductor()));
  for (int k = 0; 2 * k <= n - 2; ++k) {
    const std::size_t plus = element_index(GroupElement::rotation(2 * k, n), n);
    const std::size_t minus = element_index(GroupElement::reflection(2 * k, n), n);
    for (std::size_t j = 0; j < m.dim(); ++j) acc[j] += m.rows(plus, j) - m.rows(minus, j);
  }
  for (const auto& x : acc)
    if (!x.is_zero()) return false;
  return true;
}

ChebotarevReport chebotarev_check(int n, Mode mode, const CheckOptions& options) {
  if (n < 1) throw std::invalid_argument("chebotarev_check: n must be positive");
  const DftMatrix dft = dft_matrix(n);
  const CycloMatrix& F = dft.unnormalized;
  const Eigen::MatrixXcd F_float = F.to_complex();
  std::optional<PrimeEmbedding> embedding;
  std::optional<std::vector<std::uint64_t>> image;
  if (mode == Mode::Exact && options.modular_screen) {
    embedding.emplace(F.conductor());
    image = embedding->image(F);
  }

  ChebotarevReport report;
  report.n = n;
  report.mode = mode;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t k = 1; k <= un && report.all_nonzero; ++k) {
    for_each_combination(un, k, [&](std::span<const std::size_t> rows) {
      for_each_combination(un, k, [&](std::span<const std::size_t> cols) {
        ++report.minors_checked;
        bool zero;
        if (mode == Mode::Float) {
          Eigen::MatrixXcd sub(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
              sub(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                  F_float(static_cast<Eigen::Index>(rows[i]), static_cast<Eigen::Index>(cols[j]));
          zero = det_float(sub).singular;
        } else {
          zero = true;
          if (image) {
            std::vector<std::uint64_t> sub;
            sub.reserve(k * k);
            for (std::size_t r : rows)
              for (std::size_t c : cols) sub.push_back((*image)[r * un + c]);
            zero = embedding->det(std::move(sub), k) == 0;
          }
          if (zero) zero = det_exact(F.submatrix(rows, cols)).is_zero();
        }
        if (zero) {
          report.all_nonzero = false;
          report.zero_rows.emplace(rows.begin(), rows.end());
          report.zero_cols.emplace(cols.begin(), cols.end());
        }
        return !zero;
      });
      return report.all_nonzero;
    });
  }
  return report;
}

std::string to_string(PairFormula f) {
  switch (f) {
    case PairFormula::RotationRotation:
      return "rotation/rotation: 2i v1 v2 sin(2 pi j (k1-k2)/n)";
    case PairFormula::RotationReflection:
      return "rotation/reflection: (v1^2 - v2^2) cos(2 pi j (k1-k2)/n) + i (v1^2 + v2^2) sin(2 pi j (k1-k2)/n)";
    case PairFormula::ReflectionReflection:
      return "reflection/reflection: 2i v1 v2 sin(2 pi j (k1-k2)/n)";
  }
  return "?";
}

const PairResult* TauPairReport::first_dependent() const {
  for (const auto& p : pairs)
    if (p.dependent) return &p;
  return nullptr;
}

TauPairReport pair_independence_tau(int n, int j, std::span<const CycloNum> v) {
  const Representation rep = Representation::tau(n, j);
  if (v.size() != 2) throw std::invalid_argument("pair_independence_tau: vector must have length 2");
  for (const auto& x : v)
    if (x.conductor() != rep.conductor()) throw std::invalid_argument("pair_independence_tau: conductor mismatch");

  const auto elements = enumerate_elements(n);
  std::vector<std::vector<CycloNum>> images;
  for (GroupElement g : elements) images.push_back(rep_matrix(rep, g) * v);

  const std::complex<double> v1 = v[0].to_complex(), v2 = v[1].to_complex();
  const std::complex<double> I(0.0, 1.0);
  TauPairReport report;
  report.n = n;
  report.j = j;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      const GroupElement g = elements[a], h = elements[b];
      CycloNum det = images[a][0] * images[b][1] - images[a][1] * images[b][0];
      const double theta = 2.0 * std::numbers::pi * j * (g.power - h.power) / n;
      PairFormula formula;
      std::complex<double> value;
      if (!g.reflect && !h.reflect) {
        formula = PairFormula::RotationRotation;
        value = 2.0 * I * v1 * v2 * std::sin(theta);
      } else if (g.reflect && h.reflect) {
        formula = PairFormula::ReflectionReflection;
        value = 2.0 * I * v1 * v2 * std::sin(theta);
      } else {
        formula = PairFormula::RotationReflection;
        value = (v1 * v1 - v2 * v2) * std::cos(theta) + I * (v1 * v1 + v2 * v2) * std::sin(theta);
      }
      const bool dependent = det.is_zero();
      report.dependent_count += dependent ? 1 : 0;
      report.pairs.push_back({g, h, std::move(det), dependent, formula, value});
    }
  return report;
}

}  // namespace framelab
