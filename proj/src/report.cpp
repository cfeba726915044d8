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

#include "framelab/report.hpp"

#include <cmath>

#include "framelab/literal.hpp"

namespace framelab {

namespace {

nlohmann::json labels_json(std::span<const GroupElement> elements) {
  auto out = nlohmann::json::array();
  for (GroupElement g : elements) out.push_back(to_string(g));
  return out;
}

nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

nlohmann::json context_json(const RunContext& ctx) {
  nlohmann::json j;
  j["n"] = ctx.n;
  j["rep"] = ctx.rep;
  j["vector"] = ctx.vector;
  j["seed"] = ctx.seed ? nlohmann::json(*ctx.seed) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

nlohmann::json to_json(const HaarCertificate& cert, const RunContext& ctx) {
  nlohmann::json j = context_json(ctx);
  j["mode"] = to_string(cert.mode);
  j["status"] = cert.pass ? "PASS" : "FAIL";
  j["certificate"] = cert.mode == Mode::Exact;
  j["subsets_checked"] = cert.subsets_checked;
  j["subsets_total"] = cert.subsets_total;
  j["failing_subset"] = cert.failing_subset ? labels_json(*cert.failing_subset) : nlohmann::json(nullptr);
  if (cert.pass) {
    j["kernel_witness"] = nullptr;
  } else if (cert.mode == Mode::Exact) {
    auto w = nlohmann::json::array();
    for (const auto& x : cert.kernel_witness) w.push_back(format_cyclo_literal(x, ctx.n));
    j["kernel_witness"] = w;
  } else {
    auto w = nlohmann::json::array();
    for (const auto& x : cert.kernel_witness_float) w.push_back({x.real(), x.imag()});
    j["kernel_witness"] = w;
  }
  return j;
}

nlohmann::json to_json(const DependenceCertificate& cert) {
  return {{"n", cert.n},
          {"plus_set", labels_json(cert.plus_set)},
          {"minus_set", labels_json(cert.minus_set)},
          {"identity", cert.identity()},
          {"verified", cert.verified},
          {"status", cert.verified ? "PASS" : "FAIL"}};
}

nlohmann::json to_json(const ChebotarevReport& report) {
  nlohmann::json j{{"n", report.n},
                   {"mode", to_string(report.mode)},
                   {"all_nonzero", report.all_nonzero},
                   {"minors_checked", report.minors_checked},
                   {"status", report.all_nonzero ? "PASS" : "FAIL"}};
  if (report.zero_rows) j["zero_minor"] = {{"rows", *report.zero_rows}, {"cols", *report.zero_cols}};
  else j["zero_minor"] = nullptr;
  return j;
}

nlohmann::json to_json(const TauPairReport& report) {
  auto dependent = nlohmann::json::array();
  for (const auto& p : report.pairs)
    if (p.dependent) dependent.push_back({to_string(p.g), to_string(p.h)});
  return {{"n", report.n},
          {"j", report.j},
          {"pairs_checked", report.pairs.size()},
          {"dependent_pairs", dependent},
          {"status", report.all_independent() ? "PASS" : "FAIL"}};
}

nlohmann::json to_json(const PrimeCaseReport& report, int n) {
  return {{"subset", labels_json(report.subset)},
          {"rotations", report.rotations},
          {"homogeneous", report.homogeneous},
          {"nonzero", report.nonzero},
          {"terms", report.determinant.term_count()},
          {"witness_monomial", report.witness_monomial},
          {"witness_coefficient", format_cyclo_literal(report.witness_coefficient, n)},
          {"predicted", format_cyclo_literal(report.predicted, n)},
          {"sign", report.sign}};
}

nlohmann::json to_json(const ErasureAudit& audit, std::span<const GroupElement> labels, const RunContext& ctx) {
  nlohmann::json j = context_json(ctx);
  j["patterns"] = audit.reports.size();
  j["singular_patterns"] = audit.singular_patterns;
  j["worst_error"] = finite_or_null(audit.worst_error);
  j["worst_condition"] = finite_or_null(audit.worst_condition);
  auto singular = nlohmann::json::array();
  for (const auto& r : audit.reports) {
    if (!r.singular) continue;
    std::vector<GroupElement> erased;
    for (std::size_t k : r.pattern) erased.push_back(labels[k]);
    singular.push_back(labels_json(erased));
  }
  j["singular"] = singular;
  j["status"] = audit.singular_patterns == 0 ? "PASS" : "FAIL";
  return j;
}

}  // namespace framelab
