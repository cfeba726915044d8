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

#include "framelab/erasure.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "framelab/combinatorics.hpp"

namespace framelab {

FrameBounds frame_bounds(const Eigen::MatrixXcd& rows) {
  if (rows.cols() == 0) throw std::invalid_argument("frame_bounds: empty dimension");
  // sum_k |<u, u_k>|^2 = ||conj(M) u||^2, whose Gram matrix is the conjugate
  // of M^H M and has the same spectrum.
  const Eigen::MatrixXcd gram = rows.adjoint() * rows;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const double scale = std::max(1.0, std::abs(ev.maxCoeff()));
  auto clean = [&](double x) { return std::abs(x) <= 1e-13 * scale ? 0.0 : x; };
  return {clean(ev.minCoeff()), clean(ev.maxCoeff())};
}

FrameBounds frame_bounds(const OrbitMatrix& m) { return frame_bounds(m.rows.to_complex()); }

Eigen::VectorXcd encode(const Eigen::MatrixXcd& rows, const Eigen::VectorXcd& u) {
  if (rows.cols() != u.size()) throw std::invalid_argument("encode: dimension mismatch");
  return rows.conjugate() * u;
}

ErasureReport erase_and_reconstruct(const Eigen::MatrixXcd& rows, const Eigen::VectorXcd& u,
                                    std::span<const std::size_t> pattern) {
  if (rows.cols() != u.size()) throw std::invalid_argument("erase_and_reconstruct: dimension mismatch");
  const auto total = static_cast<std::size_t>(rows.rows());
  std::vector<bool> erased(total, false);
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (pattern[k] >= total) throw std::invalid_argument("erase_and_reconstruct: row index out of range");
    if (k > 0 && pattern[k] <= pattern[k - 1])
      throw std::invalid_argument("erase_and_reconstruct: pattern must be strictly increasing");
    erased[pattern[k]] = true;
  }
  ErasureReport report;
  report.pattern.assign(pattern.begin(), pattern.end());

  const Eigen::VectorXcd coeffs = encode(rows, u);
  const Eigen::Index survivors = static_cast<Eigen::Index>(total - pattern.size());
  Eigen::MatrixXcd analysis(survivors, rows.cols());
  Eigen::VectorXcd kept(survivors);
  for (std::size_t k = 0, r = 0; k < total; ++k) {
    if (erased[k]) continue;
    analysis.row(static_cast<Eigen::Index>(r)) = rows.row(static_cast<Eigen::Index>(k)).conjugate();
    kept(static_cast<Eigen::Index>(r)) = coeffs(static_cast<Eigen::Index>(k));
    ++r;
  }

  const double inf = std::numeric_limits<double>::infinity();
  if (survivors < rows.cols()) {
    report.singular = true;
    report.condition = report.error = inf;
    return report;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(analysis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  if (smax == 0.0 || smin <= kSingularValueRatio * smax) {
    report.singular = true;
    report.condition = report.error = inf;
    return report;
  }
  report.condition = smax / smin;
  const Eigen::VectorXcd recovered = svd.solve(kept);
  const double norm = u.norm();
  report.error = norm == 0.0 ? (recovered - u).norm() : (recovered - u).norm() / norm;
  return report;
}

Eigen::VectorXcd seeded_test_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::VectorXcd u(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    const double re = unit(rng);
    u(k) = {re, unit(rng)};
  }
  return u;
}

ErasureAudit exhaustive_erasure_audit(const Eigen::MatrixXcd& rows, Eigen::VectorXcd u, unsigned threads) {
  const auto total = static_cast<std::size_t>(rows.rows());
  const auto d = static_cast<std::size_t>(rows.cols());
  if (total < d) throw std::invalid_argument("exhaustive_erasure_audit: fewer rows than the dimension");
  if (u.size() == 0) u = seeded_test_vector(d, 0x5eed);

  const std::size_t count = binomial(total, d);
  ErasureAudit audit;
  audit.reports.resize(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < count;) {
      const auto kept = unrank_combination(total, d, idx);
      std::vector<std::size_t> pattern;
      for (std::size_t k = 0, j = 0; k < total; ++k) {
        if (j < kept.size() && kept[j] == k) ++j;
        else pattern.push_back(k);
      }
      audit.reports[idx] = erase_and_reconstruct(rows, u, pattern);
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : audit.reports) {
    if (r.singular) {
      ++audit.singular_patterns;
      continue;
    }
    audit.worst_error = std::max(audit.worst_error, r.error);
    audit.worst_condition = std::max(audit.worst_condition, r.condition);
  }
  return audit;
}

void write_erasure_csv(std::ostream& os, const ErasureAudit& audit, std::span<const GroupElement> labels) {
  os << "pattern;condition;error\n";
  for (const auto& r : audit.reports) {
    for (std::size_t k = 0; k < r.pattern.size(); ++k) os << (k ? "," : "") << to_string(labels[r.pattern[k]]);
    os << ';' << r.condition << ';' << r.error << '\n';
  }
}

}  // namespace framelab
