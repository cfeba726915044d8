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

#ifndef FRAMELAB_REPORT_HPP
#define FRAMELAB_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "framelab/erasure.hpp"
#include "framelab/minors.hpp"
#include "framelab/sympoly.hpp"

namespace framelab {

struct RunContext {
  int n = 0;
  std::string rep;
  std::optional<std::uint64_t> seed;
  std::string vector;  // cyclotomic literal of the generating vector
};

/// Fields n, rep, mode, status, certificate, subsets_checked, subsets_total,
/// failing_subset, kernel_witness, vector and seed. Exact witnesses are
/// cyclotomic literals, float witnesses [re, im] pairs. `certificate` is true
/// only for exact verdicts.
nlohmann::json to_json(const HaarCertificate& cert, const RunContext& ctx);
nlohmann::json to_json(const DependenceCertificate& cert);
nlohmann::json to_json(const ChebotarevReport& report);
nlohmann::json to_json(const TauPairReport& report);
nlohmann::json to_json(const PrimeCaseReport& report, int n);
nlohmann::json to_json(const ErasureAudit& audit, std::span<const GroupElement> labels, const RunContext& ctx);

}  // namespace framelab

#endif  // FRAMELAB_REPORT_HPP
