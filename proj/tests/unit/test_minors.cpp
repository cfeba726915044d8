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

#include <doctest.h>

#include <random>

#include "framelab/combinatorics.hpp"
#include "framelab/literal.hpp"
#include "framelab/minors.hpp"
#include "framelab/modular.hpp"
#include "oracles.hpp"

using namespace framelab;

namespace {

std::vector<GroupElement> labels(int n, std::initializer_list<const char*> names) {
  std::vector<GroupElement> out;
  for (const char* s : names) out.push_back(parse_element(s, n));
  return out;
}

bool witness_annihilates(const CycloMatrix& sub, const std::vector<CycloNum>& c) {
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    CycloNum acc = CycloNum::zero(sub.conductor());
    for (std::size_t i = 0; i < sub.rows(); ++i) acc += c[i] * sub(i, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

CheckOptions single_thread(bool screen = true) { return CheckOptions{screen, 1}; }

}  // namespace

TEST_CASE("combinatorics") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(3, 4) == 0);
  const auto all = combinations(6, 3);
  REQUIRE(all.size() == 20);
  for (std::size_t k = 0; k < all.size(); ++k) CHECK(unrank_combination(6, 3, k) == all[k]);
}

TEST_CASE("det_exact on fixed matrices") {
  CHECK(det_exact(CycloMatrix::identity(4, 12)).is_one());
  std::mt19937_64 rng(31);
  CycloMatrix m = oracle::random_matrix(rng, 4, 12, true);
  for (std::size_t j = 0; j < 4; ++j) m(3, j) = m(1, j);
  CHECK(det_exact(m).is_zero());

  const unsigned N = conductor_for(3);
  const CycloNum one = CycloNum::one(N), z = omega_power(3, 1), z2 = omega_power(3, 2);
  const CycloMatrix V = CycloMatrix::from_rows({{one, one, one}, {one, z, z2}, {one, z2, z2 * z2}});
  const CycloNum expected = (z - one) * (z2 - one) * (z2 - z);
  CHECK(det_exact(V) == expected);
  CHECK(oracle::cofactor_det(V) == expected);
}

TEST_CASE("property: det_exact equals the cofactor oracle") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t size = 1 + static_cast<std::size_t>(trial % 4);
    const unsigned N = trial % 3 == 0 ? 4 : (trial % 3 == 1 ? 12 : 20);
    const CycloMatrix m = oracle::random_matrix(rng, size, N, trial % 2 == 0);
    CHECK(det_exact(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("det_float") {
  const auto id = det_float(Eigen::MatrixXcd::Identity(3, 3));
  CHECK(std::abs(id.value - 1.0) < 1e-15);
  CHECK_FALSE(id.singular);
  const auto zero = det_float(Eigen::MatrixXcd::Zero(3, 3));
  CHECK(zero.value == 0.0);
  CHECK(zero.singular);
}

TEST_CASE("property: exact and float determinants agree") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const CycloMatrix m = oracle::random_matrix(rng, 5, trial % 2 ? 20 : 28, false);
    const auto exact = to_complex_float(det_exact(m));
    const auto approx = det_float(m.to_complex()).value;
    CHECK(std::abs(exact - approx) <= 1e-8 * std::abs(exact));
  }
}

TEST_CASE("modular embedding is a ring homomorphism") {
  for (unsigned N : {4u, 12u, 20u, 28u}) {
    const PrimeEmbedding emb(N);
    CHECK(emb.prime() % N == 1);
    CHECK(is_prime_u64(emb.prime()));
    CHECK(emb.pow(emb.root(), N) == 1);
    std::mt19937_64 rng(N);
    for (int t = 0; t < 20; ++t) {
      const CycloNum a = oracle::random_cyclo(rng, N, -10, 10, 7), b = oracle::random_cyclo(rng, N, -10, 10, 7);
      CHECK(*emb.image(a * b) == emb.mul(*emb.image(a), *emb.image(b)));
      CHECK(*emb.image(a + b) == (*emb.image(a) + *emb.image(b)) % emb.prime());
    }
    const CycloMatrix m = oracle::random_matrix(rng, 4, N, true);
    CHECK(emb.det(*emb.image(m), 4) == *emb.image(det_exact(m)));
  }
}

TEST_CASE("orbit matrices") {
  const auto kappa5 = Representation::kappa(5);
  const auto v = parse_vector_literal("i,-i,1,1+i,2-i", 5);
  const OrbitMatrix m = orbit_matrix(kappa5, v);
  // Rows as printed for the n = 5 example.
  const char* expected[10] = {"i,-i,1,1+i,2-i", "2-i,i,-i,1,1+i", "1+i,2-i,i,-i,1", "1,1+i,2-i,i,-i",
                              "-i,1,1+i,2-i,i", "i,2-i,1+i,1,-i", "-i,i,2-i,1+i,1", "1,-i,i,2-i,1+i",
                              "1+i,1,-i,i,2-i", "2-i,1+i,1,-i,i"};
  for (std::size_t r = 0; r < 10; ++r) {
    const auto row = parse_vector_literal(expected[r], 5);
    for (std::size_t j = 0; j < 5; ++j) CHECK_MESSAGE(m.rows(r, j) == row[j], "row ", r, " col ", j);
  }

  const unsigned N = kappa5.conductor();
  std::vector<CycloNum> e0(5, CycloNum::zero(N));
  e0[0] = CycloNum::one(N);
  const OrbitMatrix basis = orbit_matrix(kappa5, e0);
  for (std::size_t k = 0; k < 5; ++k)
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(basis.rows(k, j).is_one() == (j == k));
      CHECK(basis.rows(k + 5, j).is_one() == (j == k));
    }

  const auto tau = Representation::tau(3, 1);
  const OrbitMatrix t = orbit_matrix(tau, std::vector<CycloNum>{CycloNum::one(12), CycloNum::zero(12)});
  for (int k = 0; k < 3; ++k) {
    CHECK(t.rows(k, 0) == omega_power(3, k));
    CHECK(t.rows(k, 1).is_zero());
    CHECK(t.rows(k + 3, 0).is_zero());
    CHECK(t.rows(k + 3, 1) == omega_power(3, -k));
  }
  CHECK_THROWS_AS(orbit_matrix(kappa5, std::vector<CycloNum>(4, CycloNum::zero(N))), std::invalid_argument);
}

TEST_CASE("check_haar on the n = 5 example") {
  const OrbitMatrix m = orbit_matrix(Representation::kappa(5), parse_vector_literal("i,-i,1,1+i,2-i", 5));
  for (bool screen : {true, false}) {
    const auto cert = check_haar(m, Mode::Exact, single_thread(screen));
    CHECK(cert.pass);
    CHECK(cert.subsets_checked == 252);
    CHECK_FALSE(cert.failing_subset.has_value());
  }
  CHECK(check_haar(m, Mode::Float).pass);
}

TEST_CASE("check_haar on the zero vector") {
  for (const char* rep : {"kappa", "sigma", "tau:1", "char:sign"}) {
    const auto r = Representation::parse(rep, 5);
    const OrbitMatrix m =
        orbit_matrix(r, std::vector<CycloNum>(static_cast<std::size_t>(r.dim()), CycloNum::zero(r.conductor())));
    const auto cert = check_haar(m, Mode::Exact);
    CHECK_FALSE(cert.pass);
    CHECK(cert.subsets_checked == 1);
    CHECK(cert.failing_rows == combinations(10, static_cast<std::size_t>(r.dim())).front());
  }
}

TEST_CASE("check_haar at n = 4 finds the lexicographically least failure") {
  std::mt19937_64 rng(34);
  const auto kappa = Representation::kappa(4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = random_gaussian_vector(4, 4, 100 + static_cast<std::uint64_t>(trial));
    const OrbitMatrix m = orbit_matrix(kappa, v);
    const auto cert = check_haar(m, Mode::Exact);
    REQUIRE_FALSE(cert.pass);
    // Independent scan with the cofactor oracle.
    std::optional<std::vector<std::size_t>> first;
    std::size_t position = 0;
    for_each_combination(8, 4, [&](std::span<const std::size_t> rows) {
      ++position;
      if (!oracle::cofactor_det(m.rows.select_rows(rows)).is_zero()) return true;
      first.emplace(rows.begin(), rows.end());
      return false;
    });
    REQUIRE(first.has_value());
    CHECK(cert.failing_rows == *first);
    CHECK(cert.subsets_checked == position);
    CHECK(*cert.failing_subset == labels(4, {"e", "r", "s", "r^3s"}));
    CHECK(witness_annihilates(m.rows.select_rows(*cert.failing_rows), cert.kernel_witness));
    CHECK(cert.kernel_witness.front().is_one());

    // The dependency carried by the even-n identity.
    const std::vector<std::size_t> quad{0, 2, 4, 6};
    const auto c = left_kernel_vector(m.rows.select_rows(quad));
    const unsigned N = kappa.conductor();
    CHECK(c == std::vector<CycloNum>{CycloNum::one(N), CycloNum::one(N), CycloNum::rational(N, -1),
                                     CycloNum::rational(N, -1)});
    CHECK(even_witness_holds(m));
  }
}

TEST_CASE("threaded and single-threaded certification agree") {
  for (int n : {4, 6}) {
    const auto m = orbit_matrix(Representation::kappa(n), random_gaussian_vector(n, static_cast<std::size_t>(n), 5));
    const auto a = check_haar(m, Mode::Exact, CheckOptions{true, 1});
    const auto b = check_haar(m, Mode::Exact, CheckOptions{true, 4});
    const auto c = check_haar(m, Mode::Exact, CheckOptions{false, 3});
    CHECK(a.failing_rows == b.failing_rows);
    CHECK(a.failing_rows == c.failing_rows);
    CHECK(a.subsets_checked == b.subsets_checked);
    CHECK(a.kernel_witness == b.kernel_witness);
  }
}

TEST_CASE("float witnesses have small residuals") {
  const auto m = orbit_matrix(Representation::kappa(6), random_gaussian_vector(6, 6, 9));
  const auto cert = check_haar(m, Mode::Float);
  REQUIRE_FALSE(cert.pass);
  const Eigen::MatrixXcd sub = m.rows.select_rows(*cert.failing_rows).to_complex();
  Eigen::VectorXcd c(static_cast<Eigen::Index>(cert.kernel_witness_float.size()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = cert.kernel_witness_float[static_cast<std::size_t>(k)];
  CHECK((c.transpose() * sub).norm() < 1e-8 * sub.norm() * c.norm());
}

TEST_CASE("even dependence certificates") {
  for (int n : {4, 6, 8, 10}) {
    const auto cert = even_dependence_certificate(n);
    CHECK(cert.verified);
    CHECK(cert.plus_set.size() == static_cast<std::size_t>(n / 2));
  }
  CHECK(even_dependence_certificate(4).identity() == "I + A^2 = B + A^2B");
  CHECK(even_dependence_certificate(6).identity() == "I + A^2 + A^4 = B + A^2B + A^4B");
  CHECK_THROWS_AS(even_dependence_certificate(5), std::invalid_argument);
  CHECK_THROWS_AS(even_dependence_certificate(2), std::invalid_argument);
}

TEST_CASE("property: even n always fails with the stacked witness") {
  for (int n : {4, 6, 8}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = orbit_matrix(Representation::kappa(n), random_gaussian_vector(n, static_cast<std::size_t>(n), seed));
      CHECK_FALSE(check_haar(m, Mode::Exact).pass);
      CHECK(even_witness_holds(m));
    }
  }
}

TEST_CASE("property: spark equivalence at n = 3 against the cofactor oracle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = orbit_matrix(Representation::kappa(3), random_gaussian_vector(3, 3, seed));
    bool all_nonzero = true;
    for_each_combination(6, 3, [&](std::span<const std::size_t> rows) {
      all_nonzero = all_nonzero && !oracle::cofactor_det(m.rows.select_rows(rows)).is_zero();
      return true;
    });
    CHECK(check_haar(m, Mode::Exact).pass == all_nonzero);
  }
  // A non-generic vector: v = (1, 1, 0) makes e and s coincide.
  const auto m = orbit_matrix(Representation::kappa(3), parse_vector_literal("1,1,0", 3));
  CHECK_FALSE(check_haar(m, Mode::Exact).pass);
}

TEST_CASE("property: intertwining invariance") {
  for (int n : {3, 5}) {
    const CycloMatrix F = dft_matrix(n).unnormalized;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto v = random_gaussian_vector(n, static_cast<std::size_t>(n), seed);
      const auto fv = F * std::span<const CycloNum>(v);
      const bool a = check_haar(orbit_matrix(Representation::kappa(n), v), Mode::Exact).pass;
      const bool b = check_haar(orbit_matrix(Representation::sigma(n), fv), Mode::Exact).pass;
      CHECK(a == b);
    }
    std::vector<CycloNum> degenerate(static_cast<std::size_t>(n), CycloNum::one(conductor_for(n)));
    const auto fd = F * std::span<const CycloNum>(degenerate);
    CHECK(check_haar(orbit_matrix(Representation::kappa(n), degenerate), Mode::Exact).pass ==
          check_haar(orbit_matrix(Representation::sigma(n), fd), Mode::Exact).pass);
  }
}

TEST_CASE("property: prime n is generic") {
  for (int n : {3, 5}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = orbit_matrix(Representation::kappa(n), random_gaussian_vector(n, static_cast<std::size_t>(n), seed));
      CHECK(check_haar(m, Mode::Exact).pass);
    }
  }
}

TEST_CASE("chebotarev") {
  for (int n : {2, 3, 5, 7}) {
    const auto report = chebotarev_check(n, Mode::Exact);
    CHECK(report.all_nonzero);
    CHECK(report.minors_checked == binomial(2 * static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n)) - 1);
  }
  const auto four = chebotarev_check(4, Mode::Exact);
  CHECK_FALSE(four.all_nonzero);
  CHECK(*four.zero_rows == std::vector<std::size_t>{0, 2});
  CHECK(*four.zero_cols == std::vector<std::size_t>{0, 2});
  CHECK(chebotarev_check(5, Mode::Float).all_nonzero);
  CHECK(chebotarev_check(5, Mode::Exact, CheckOptions{false, 1}).all_nonzero);
}

TEST_CASE("tau pair independence") {
  const unsigned N5 = conductor_for(5);
  const std::vector<CycloNum> e1{CycloNum::one(N5), CycloNum::zero(N5)};
  const auto basis = pair_independence_tau(5, 1, e1);
  for (const auto& p : basis.pairs)
    if (!p.g.reflect && !p.h.reflect) CHECK(p.dependent);

  const auto nine = pair_independence_tau(9, 3, random_gaussian_vector(9, 2, 3));
  bool found = false;
  for (const auto& p : nine.pairs) found = found || (p.dependent && p.g == GroupElement{} && p.h == GroupElement::rotation(3, 9));
  CHECK(found);

  for (int n : {4, 6})
    for (int j = 1; j < n; ++j) {
      if (2 * j == n) continue;
      const auto report = pair_independence_tau(n, j, random_gaussian_vector(n, 2, 4));
      bool half_turn = false;
      for (const auto& p : report.pairs)
        half_turn = half_turn || (p.dependent && p.g == GroupElement{} && p.h == GroupElement::rotation(n / 2, n));
      // tau_j(r^(n/2)) is -I for odd j and I for even j.
      CHECK_MESSAGE(half_turn, "n=", n, " j=", j);
    }
}

TEST_CASE("property: tau pair determinants match the closed forms") {
  for (int n : {5, 7, 9})
    for (int j = 1; j < n; ++j)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto v = random_gaussian_vector(n, 2, seed);
        const auto report = pair_independence_tau(n, j, v);
        for (const auto& p : report.pairs) {
          const auto exact = to_complex_float(p.det);
          CHECK(std::abs(exact - p.formula_value) < 1e-9 * (1.0 + std::abs(exact)));
        }
      }
}
