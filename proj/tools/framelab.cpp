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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <stdexcept>

#include "framelab/combinatorics.hpp"
#include "framelab/erasure.hpp"
#include "framelab/literal.hpp"
#include "framelab/minors.hpp"
#include "framelab/report.hpp"
#include "framelab/sympoly.hpp"

namespace {

using namespace framelab;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;

struct VectorArgs {
  std::string literal;
  bool random = false;
  std::uint64_t seed = 0;
};

void add_vector_options(CLI::App* cmd, VectorArgs& args) {
  auto* vec = cmd->add_option("--vector", args.literal, "Comma-separated cyclotomic literals, e.g. \"i,-i,1,1+i,2-i\"");
  auto* rnd = cmd->add_flag("--random", args.random, "Use a seeded random Gaussian-rational vector");
  vec->excludes(rnd);
  cmd->add_option("--seed", args.seed, "Seed for --random")->capture_default_str();
}

/// The generating vector and the context recorded in reports.
std::vector<CycloNum> resolve_vector(const VectorArgs& args, const Representation& rep, RunContext& ctx) {
  std::vector<CycloNum> v;
  if (args.random) {
    v = random_gaussian_vector(rep.n(), static_cast<std::size_t>(rep.dim()), args.seed);
    ctx.seed = args.seed;
  } else if (!args.literal.empty()) {
    v = parse_vector_literal(args.literal, rep.n());
  } else {
    throw std::invalid_argument("one of --vector or --random is required");
  }
  if (v.size() != static_cast<std::size_t>(rep.dim()))
    throw std::invalid_argument("vector has " + std::to_string(v.size()) + " entries; " + rep.name() + " needs " +
                                std::to_string(rep.dim()));
  ctx.vector = format_vector_literal(v, rep.n());
  return v;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string join_labels(std::span<const GroupElement> elements) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) out += (k ? ", " : "") + to_string(elements[k]);
  return out + "}";
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + "}";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int cmd_check_haar(int n, const std::string& rep_text, const std::string& mode_text, const VectorArgs& vargs,
                   const CheckOptions& options, const std::string& json_path) {
  const Representation rep = Representation::parse(rep_text, n);
  const Mode mode = parse_mode(mode_text);
  RunContext ctx{n, rep.name(), std::nullopt, {}};
  const auto v = resolve_vector(vargs, rep, ctx);
  const OrbitMatrix m = orbit_matrix(rep, v);
  const HaarCertificate cert = check_haar(m, mode, options);

  std::cout << "n=" << n << " rep=" << rep.name() << " mode=" << to_string(mode) << '\n';
  std::cout << "vector: (" << ctx.vector << ")\n";
  if (cert.pass) {
    std::cout << "PASS: " << cert.subsets_checked << " of " << cert.subsets_total << " subsets "
              << (mode == Mode::Exact ? "have nonzero determinant (exact certificate)" : "numerically nonsingular")
              << '\n';
  } else {
    std::cout << "FAIL after " << cert.subsets_checked << " of " << cert.subsets_total << " subsets\n";
    std::cout << "failing subset: " << join_labels(*cert.failing_subset) << '\n';
    std::cout << "kernel witness: (";
    if (mode == Mode::Exact) {
      std::cout << format_vector_literal(cert.kernel_witness, n);
    } else {
      for (std::size_t k = 0; k < cert.kernel_witness_float.size(); ++k)
        std::cout << (k ? ", " : "") << cert.kernel_witness_float[k];
    }
    std::cout << ")\n";
  }
  write_json(json_path, to_json(cert, ctx));
  return cert.pass ? kPass : kFail;
}

int cmd_certify_even(int n, const std::string& json_path) {
  const DependenceCertificate cert = even_dependence_certificate(n);
  std::cout << "n=" << n << " kappa\n";
  std::cout << "plus:  " << join_labels(cert.plus_set) << '\n';
  std::cout << "minus: " << join_labels(cert.minus_set) << '\n';
  std::cout << cert.identity() << '\n';
  std::cout << (cert.verified ? "VERIFIED" : "NOT VERIFIED") << '\n';
  write_json(json_path, to_json(cert));
  return cert.verified ? kPass : kFail;
}

int cmd_chebotarev(int n, const std::string& mode_text, const CheckOptions& options, const std::string& json_path) {
  if (n < 2) throw std::invalid_argument("chebotarev requires n >= 2");
  const ChebotarevReport report = chebotarev_check(n, parse_mode(mode_text), options);
  std::cout << "n=" << n << " mode=" << to_string(report.mode) << ": " << report.minors_checked << " minors checked\n";
  if (report.all_nonzero) {
    std::cout << (report.mode == Mode::Exact ? "all minors nonzero" : "all minors numerically nonzero") << '\n';
  } else {
    std::cout << "zero minor: rows " << join(*report.zero_rows) << " cols " << join(*report.zero_cols) << '\n';
  }
  write_json(json_path, to_json(report));
  return report.all_nonzero ? kPass : kFail;
}

int cmd_audit_erasures(int n, const std::string& rep_text, const VectorArgs& vargs, unsigned threads,
                       const std::string& csv_path, const std::string& json_path) {
  const Representation rep = Representation::parse(rep_text, n);
  RunContext ctx{n, rep.name(), std::nullopt, {}};
  const auto v = resolve_vector(vargs, rep, ctx);
  const OrbitMatrix m = orbit_matrix(rep, v);
  const Eigen::MatrixXcd rows = m.rows.to_complex();
  const FrameBounds bounds = frame_bounds(rows);
  const ErasureAudit audit = exhaustive_erasure_audit(rows, {}, threads);

  std::cout << "n=" << n << " rep=" << rep.name() << " vector: (" << ctx.vector << ")\n";
  std::cout << "frame bounds: a=" << bounds.lower << " b=" << bounds.upper
            << (bounds.is_frame() ? "" : " (not a frame)") << '\n';
  std::cout << audit.reports.size() << " maximal patterns, " << audit.singular_patterns << " singular\n";
  std::cout << "worst relative error " << audit.worst_error << ", worst condition " << audit.worst_condition << '\n';
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    write_erasure_csv(out, audit, m.labels);
  }
  write_json(json_path, to_json(audit, m.labels, ctx));
  return audit.singular_patterns == 0 ? kPass : kFail;
}

int cmd_prime_audit(int n, std::size_t samples, std::uint64_t seed, const std::string& json_path) {
  if (!is_prime(n) || n > 7) throw std::invalid_argument("prime-audit requires a prime n <= 7");
  const auto elements = enumerate_elements(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> subsets;
  if (n <= 5) {
    subsets = combinations(2 * un, un);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, binomial(2 * un, un) - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < std::min<std::uint64_t>(samples, binomial(2 * un, un))) chosen.insert(pick(rng));
    for (std::uint64_t idx : chosen) subsets.push_back(unrank_combination(2 * un, un, idx));
  }

  std::size_t ok = 0, negative_sign = 0;
  auto results = nlohmann::json::array();
  for (const auto& rows : subsets) {
    std::vector<GroupElement> subset;
    for (std::size_t r : rows) subset.push_back(elements[r]);
    const PrimeCaseReport report = prime_case_audit(n, subset);
    const bool good = report.nonzero && report.homogeneous && !report.witness_coefficient.is_zero() && report.sign != 0;
    ok += good ? 1 : 0;
    negative_sign += report.sign < 0 ? 1 : 0;
    if (!good) std::cout << "CONTRADICTION at " << join_labels(subset) << '\n';
    results.push_back(to_json(report, n));
  }
  std::cout << "n=" << n << ": " << subsets.size() << (n <= 5 ? " subsets (all)" : " sampled subsets")
            << ", " << ok << " with a nonvanishing homogeneous determinant and matching witness coefficient\n";
  std::cout << "witness sign: " << subsets.size() - negative_sign << " positive, " << negative_sign << " negative\n";
  write_json(json_path, {{"n", n}, {"subsets", results}, {"status", ok == subsets.size() ? "PASS" : "FAIL"}});
  return ok == subsets.size() ? kPass : kFail;
}

int cmd_tau_audit(int n, int j, const VectorArgs& vargs, const std::string& json_path) {
  const Representation rep = Representation::tau(n, j);
  VectorArgs args = vargs;
  if (args.literal.empty()) args.random = true;
  RunContext ctx{n, rep.name(), std::nullopt, {}};
  const auto v = resolve_vector(args, rep, ctx);
  const TauPairReport report = pair_independence_tau(n, j, v);
  std::cout << "n=" << n << " tau_" << j << " vector: (" << ctx.vector << ")\n";
  std::cout << report.pairs.size() << " pairs, " << report.dependent_count << " dependent\n";
  for (const auto& p : report.pairs)
    if (p.dependent) std::cout << "dependent pair {" << to_string(p.g) << ", " << to_string(p.h) << "}\n";
  nlohmann::json out = to_json(report);
  out["vector"] = ctx.vector;
  out["seed"] = ctx.seed ? nlohmann::json(*ctx.seed) : nlohmann::json(nullptr);
  write_json(json_path, out);
  return report.all_independent() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral frames: Haar certification, dependence certificates and erasure audits"};
  app.require_subcommand(1);

  int n = 0;
  int j = 0;
  std::string rep = "kappa";
  std::string mode = "exact";
  std::string json_path, csv_path;
  VectorArgs vargs;
  unsigned threads = 0;
  bool no_screen = false;
  std::size_t samples = 20;

  auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", n, "Group order parameter")->required(); };
  auto add_json = [&](CLI::App* cmd) { cmd->add_option("--json", json_path, "Write a JSON report to PATH"); };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (default: FRAMELAB_THREADS or all cores)");
  };

  auto* check = app.add_subcommand("check-haar", "Certify the Haar property of an orbit");
  add_n(check);
  check->add_option("--rep", rep, "kappa | sigma | tau:J | char:trivial|sign|alt|altsign")->capture_default_str();
  check->add_option("--mode", mode, "exact | float")->capture_default_str();
  add_vector_options(check, vargs);
  add_json(check);
  add_threads(check);
  check->add_flag("--no-screen", no_screen, "Compute every determinant by exact elimination");

  auto* even = app.add_subcommand("certify-even", "Verify the even-n dependence identity");
  add_n(even);
  add_json(even);

  auto* cheb = app.add_subcommand("chebotarev", "Check every square minor of the DFT matrix");
  add_n(cheb);
  cheb->add_option("--mode", mode, "exact | float")->capture_default_str();
  add_json(cheb);

  auto* erase = app.add_subcommand("audit-erasures", "Reconstruct under every maximal erasure pattern");
  add_n(erase);
  erase->add_option("--rep", rep, "Representation")->capture_default_str();
  add_vector_options(erase, vargs);
  erase->add_option("--csv", csv_path, "Write per-pattern rows to PATH");
  add_json(erase);
  add_threads(erase);

  auto* prime = app.add_subcommand("prime-audit", "Symbolic determinants over subsets of the Sigma orbit");
  add_n(prime);
  prime->add_option("--samples", samples, "Sampled subsets when n = 7")->capture_default_str();
  prime->add_option("--seed", vargs.seed, "Sampling seed")->capture_default_str();
  add_json(prime);

  auto* tau = app.add_subcommand("tau-audit", "Pairwise independence in a two-dimensional irreducible");
  add_n(tau);
  tau->add_option("--j", j, "Index of tau_j")->required();
  add_vector_options(tau, vargs);
  add_json(tau);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  const CheckOptions options{!no_screen, threads};
  try {
    if (*check) return cmd_check_haar(n, rep, mode, vargs, options, json_path);
    if (*even) return cmd_certify_even(n, json_path);
    if (*cheb) return cmd_chebotarev(n, mode, options, json_path);
    if (*erase) return cmd_audit_erasures(n, rep, vargs, threads, csv_path, json_path);
    if (*prime) return cmd_prime_audit(n, samples, vargs.seed, json_path);
    if (*tau) return cmd_tau_audit(n, j, vargs, json_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
