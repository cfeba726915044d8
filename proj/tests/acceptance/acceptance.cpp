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

// Acceptance runner: one line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "framelab/combinatorics.hpp"
#include "framelab/erasure.hpp"
#include "framelab/literal.hpp"
#include "framelab/minors.hpp"
#include "framelab/sympoly.hpp"
#include "oracles.hpp"

using namespace framelab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<CycloNum> seeded_vector(int n, std::size_t dim, std::uint64_t seed) {
  return random_gaussian_vector(n, dim, seed);
}

OrbitMatrix kappa_orbit(int n, std::uint64_t seed) {
  return orbit_matrix(Representation::kappa(n), seeded_vector(n, static_cast<std::size_t>(n), seed));
}

Outcome example_frame() {
  const auto m = orbit_matrix(Representation::kappa(5), parse_vector_literal("i,-i,1,1+i,2-i", 5));
  const auto cert = check_haar(m, Mode::Exact);
  return {cert.pass && cert.subsets_checked == 252 && cert.subsets_total == 252,
          std::to_string(cert.subsets_checked) + "/" + std::to_string(cert.subsets_total) + " subsets nonsingular"};
}

Outcome even_impossibility() {
  std::size_t failures = 0, witnesses = 0, identities = 0;
  for (int n : {4, 6, 8}) {
    identities += even_dependence_certificate(n).verified ? 1 : 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = kappa_orbit(n, seed);
      failures += check_haar(m, Mode::Exact).pass ? 0 : 1;
      witnesses += even_witness_holds(m) ? 1 : 0;
    }
  }
  return {identities == 3 && failures == 60 && witnesses == 60,
          std::to_string(identities) + "/3 identities, " + std::to_string(failures) + "/60 FAIL, " +
              std::to_string(witnesses) + "/60 witnesses exact"};
}

Outcome prime_genericity() {
  // Pure fraction-free elimination; the modular screen is deliberately off here.
  const CheckOptions options{false, 0};
  std::size_t passes = 0;
  for (int n : {3, 5, 7})
    for (std::uint64_t seed = 0; seed < 20; ++seed) passes += check_haar(kappa_orbit(n, seed), Mode::Exact, options).pass ? 1 : 0;
  return {passes == 60, std::to_string(passes) + "/60 vectors PASS"};
}

Outcome chebotarev() {
  bool ok = true;
  std::size_t minors = 0;
  for (int n : {2, 3, 5, 7}) {
    const auto r = chebotarev_check(n, Mode::Exact, CheckOptions{false, 1});
    ok = ok && r.all_nonzero;
    minors += r.minors_checked;
  }
  const auto four = chebotarev_check(4, Mode::Exact);
  ok = ok && !four.all_nonzero && four.zero_rows == std::vector<std::size_t>{0, 2} &&
       four.zero_cols == std::vector<std::size_t>{0, 2};
  return {ok, std::to_string(minors) + " prime-order minors nonzero, n=4 zero at rows {0,2} cols {0,2}"};
}

CycloNum power_block(int n, std::span<const int> exponents, std::span<const int> powers) {
  const unsigned N = conductor_for(n);
  CycloMatrix m(exponents.size(), powers.size(), N);
  for (std::size_t a = 0; a < exponents.size(); ++a)
    for (std::size_t b = 0; b < powers.size(); ++b) m(a, b) = omega_power(n, static_cast<long>(exponents[a]) * powers[b]);
  return oracle::cofactor_det(m);
}

Outcome monomial_isolation() {
  const int n = 7;
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes{
      {{0, 1, 2, 3}, {0, 1, 2}}, {{0, 2, 4, 6}, {1, 3, 5}}, {{1, 3, 4, 5}, {0, 2, 6}}, {{0, 1, 5, 6}, {2, 3, 4}}};
  const std::vector<int> low{0, 1, 2, 3}, high{4, 5, 6};
  const Exponent monomial{1, 2, 2, 2, 0, 0, 0};
  std::size_t matched = 0;
  std::string signs;
  for (const auto& [ks, ls] : shapes) {
    std::vector<GroupElement> subset;
    for (int k : ks) subset.push_back(GroupElement::rotation(k, n));
    for (int l : ls) subset.push_back(GroupElement::reflection(l, n));
    const MultiPoly det = det_symbolic(symbolic_orbit_matrix(subset, Representation::sigma(n)));
    const CycloNum coefficient = coefficient_of(det, monomial);
    const CycloNum product = power_block(n, low, ks) * power_block(n, high, ls);
    int sign = 0;
    if (!product.is_zero() && coefficient == product) sign = 1;
    if (!product.is_zero() && coefficient == -product) sign = -1;
    matched += sign != 0 ? 1 : 0;
    signs += (signs.empty() ? "" : ",") + std::string(sign > 0 ? "+" : (sign < 0 ? "-" : "?"));
  }
  return {matched == shapes.size(), std::to_string(matched) + "/" + std::to_string(shapes.size()) +
                                        " subsets match the block-minor product, signs " + signs};
}

Outcome three_point_substitution() {
  const unsigned N = conductor_for(3);
  const std::vector<UniPoly> values{UniPoly::monomial(N, 0), UniPoly::monomial(N, 1), UniPoly::monomial(N, 4)};
  const auto sigma = Representation::sigma(3);
  const auto elements = enumerate_elements(3);
  std::size_t good = 0, total = 0;
  long max_degree = 0;
  for_each_combination(6, 3, [&](std::span<const std::size_t> rows) {
    std::vector<GroupElement> subset;
    for (std::size_t r : rows) subset.push_back(elements[r]);
    const UniPoly p = substitute(det_symbolic(symbolic_orbit_matrix(subset, sigma)), values);
    ++total;
    if (!p.is_zero() && p.degree() <= 8) ++good;
    if (!p.is_zero()) max_degree = std::max(max_degree, p.degree());
    return true;
  });
  return {good == 20 && total == 20,
          std::to_string(good) + "/" + std::to_string(total) + " nonzero, max degree " + std::to_string(max_degree)};
}

bool has_dependent(const TauPairReport& r, GroupElement g, GroupElement h) {
  for (const auto& p : r.pairs)
    if (p.dependent && p.g == g && p.h == h) return true;
  return false;
}

Outcome tau_pairs() {
  std::size_t a_pass = 0, b_dep = 0, b_pass = 0, c_dep = 0, c_total = 0;
  for (int j = 1; j <= 4; ++j) {
    std::size_t drawn = 0;
    for (std::uint64_t seed = 0; drawn < 10; ++seed) {
      const auto v = seeded_vector(5, 2, seed);
      if (v[0].is_zero() || v[1].is_zero()) continue;
      ++drawn;
      const auto r = pair_independence_tau(5, j, v);
      a_pass += r.pairs.size() == 45 && r.dependent_count == 0 ? 1 : 0;
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto v = seeded_vector(9, 2, seed);
    b_dep += has_dependent(pair_independence_tau(9, 3, v), GroupElement{}, GroupElement::rotation(3, 9)) ? 1 : 0;
    b_pass += pair_independence_tau(9, 1, v).dependent_count == 0 ? 1 : 0;
  }
  for (int n : {4, 6})
    for (int j = 1; j < n; ++j) {
      if (2 * j == n) continue;
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        ++c_total;
        c_dep += has_dependent(pair_independence_tau(n, j, seeded_vector(n, 2, seed)), GroupElement{},
                               GroupElement::rotation(n / 2, n))
                     ? 1
                     : 0;
      }
    }
  return {a_pass == 40 && b_dep == 10 && b_pass == 10 && c_dep == c_total,
          "(a) " + std::to_string(a_pass) + "/40, (b) tau3 " + std::to_string(b_dep) + "/10 dependent, tau1 " +
              std::to_string(b_pass) + "/10 clean, (c) " + std::to_string(c_dep) + "/" + std::to_string(c_total)};
}

Outcome intertwining() {
  std::size_t agree = 0, total = 0;
  for (int n : {3, 5}) {
    const CycloMatrix F = dft_matrix(n).unnormalized;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto v = seeded_vector(n, static_cast<std::size_t>(n), seed);
      const auto fv = F * std::span<const CycloNum>(v);
      const bool a = check_haar(orbit_matrix(Representation::kappa(n), v), Mode::Exact).pass;
      const bool b = check_haar(orbit_matrix(Representation::sigma(n), fv), Mode::Exact).pass;
      agree += a == b ? 1 : 0;
      ++total;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree"};
}

Outcome erasures() {
  const auto example = orbit_matrix(Representation::kappa(5), parse_vector_literal("i,-i,1,1+i,2-i", 5));
  const auto audit = exhaustive_erasure_audit(example.rows.to_complex());
  bool ok = audit.reports.size() == 252 && audit.singular_patterns == 0 && audit.worst_error < 1e-8;
  std::size_t matches = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = kappa_orbit(4, seed);
    const auto a = exhaustive_erasure_audit(m.rows.to_complex());
    matches += a.singular_patterns >= 1 && !check_haar(m, Mode::Exact).pass ? 1 : 0;
  }
  ok = ok && matches == 5;
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=5 worst error %.2e over %zu patterns, n=4 %zu/5 frames singular as certified",
                audit.worst_error, audit.reports.size(), matches);
  return {ok, buf};
}

Outcome oracle_suites() {
  std::mt19937_64 rng(0xacce);
  std::size_t exact_ok = 0, symbolic_ok = 0, float_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t size = 1 + static_cast<std::size_t>(t % 4);
    const unsigned N = t % 2 ? 12 : 20;
    const CycloMatrix m = oracle::random_matrix(rng, size, N, t % 3 == 0);
    exact_ok += det_exact(m) == oracle::cofactor_det(m) ? 1 : 0;
  }
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 3;
    const auto rep = t % 2 ? Representation::sigma(n) : Representation::kappa(n);
    std::vector<std::size_t> all(2 * static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> rows(all.begin(), all.begin() + n);
    std::sort(rows.begin(), rows.end());
    const auto elements = enumerate_elements(n);
    std::vector<GroupElement> subset;
    for (std::size_t r : rows) subset.push_back(elements[r]);
    const auto v = seeded_vector(n, static_cast<std::size_t>(n), rng());
    const auto symbolic = to_complex_float(substitute(det_symbolic(symbolic_orbit_matrix(subset, rep)), v));
    const auto numeric = det_float(orbit_matrix(rep, v).rows.select_rows(rows).to_complex()).value;
    symbolic_ok += std::abs(symbolic - numeric) <= 1e-8 * std::max(1.0, std::abs(symbolic)) ? 1 : 0;
  }
  for (int t = 0; t < 100; ++t) {
    const CycloMatrix m = oracle::random_matrix(rng, 2 + static_cast<std::size_t>(t % 4), t % 2 ? 20 : 28, false);
    const auto exact = to_complex_float(det_exact(m));
    float_ok += std::abs(exact - det_float(m.to_complex()).value) <= 1e-8 * std::abs(exact) ? 1 : 0;
  }
  return {exact_ok == 200 && symbolic_ok == 50 && float_ok == 100,
          "cofactor " + std::to_string(exact_ok) + "/200, symbolic " + std::to_string(symbolic_ok) + "/50, float " +
              std::to_string(float_ok) + "/100"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"n=5 example frame is full spark", example_frame, 10},
      {"even n is never full spark", even_impossibility, 30},
      {"prime n is generic", prime_genericity, 300},
      {"DFT minors", chebotarev, 60},
      {"n=7 monomial isolation", monomial_isolation, 120},
      {"n=3 substitution (1, z, z^4)", three_point_substitution, 10},
      {"tau pair independence", tau_pairs, 30},
      {"intertwining invariance", intertwining, 60},
      {"erasure simulation", erasures, 30},
      {"oracle suites", oracle_suites, 60},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= criteria[k].budget_seconds;
    outcome.pass = outcome.pass && in_budget;
    std::printf("[%s] criterion %zu: %s: %s (%.2f s, budget %.0f s%s)\n", outcome.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].name.c_str(), outcome.detail.c_str(), seconds, criteria[k].budget_seconds,
                in_budget ? "" : ", exceeded");
    std::fflush(stdout);
    failed += outcome.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
