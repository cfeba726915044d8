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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "framelab/erasure.hpp"
#include "framelab/literal.hpp"
#include "framelab/minors.hpp"
#include "framelab/report.hpp"
#include "framelab/sympoly.hpp"

namespace py = pybind11;
using namespace framelab;

namespace {

struct Generated {
  Representation rep;
  std::vector<CycloNum> vector;
  RunContext ctx;
};

// Exactly one of `vector` and `seed` must be given.
Generated generate(int n, const std::string& rep_text, const std::optional<std::string>& vector,
                   std::optional<std::uint64_t> seed) {
  if (vector.has_value() == seed.has_value()) throw std::invalid_argument("pass exactly one of vector and seed");
  Representation rep = Representation::parse(rep_text, n);
  auto v = vector ? parse_vector_literal(*vector, n) : random_gaussian_vector(n, static_cast<std::size_t>(rep.dim()), *seed);
  if (v.size() != static_cast<std::size_t>(rep.dim()))
    throw std::invalid_argument(rep.name() + " needs " + std::to_string(rep.dim()) + " entries");
  RunContext ctx{n, rep.name(), seed, format_vector_literal(v, n)};
  return {std::move(rep), std::move(v), std::move(ctx)};
}

std::string check_haar_json(int n, const std::string& rep, const std::optional<std::string>& vector,
                            std::optional<std::uint64_t> seed, const std::string& mode, unsigned threads, bool screen) {
  const auto g = generate(n, rep, vector, seed);
  const OrbitMatrix m = orbit_matrix(g.rep, g.vector);
  py::gil_scoped_release release;
  return to_json(check_haar(m, parse_mode(mode), CheckOptions{screen, threads}), g.ctx).dump();
}

std::string audit_erasures_json(int n, const std::string& rep, const std::optional<std::string>& vector,
                                std::optional<std::uint64_t> seed, unsigned threads) {
  const auto g = generate(n, rep, vector, seed);
  const OrbitMatrix m = orbit_matrix(g.rep, g.vector);
  py::gil_scoped_release release;
  return to_json(exhaustive_erasure_audit(m.rows.to_complex(), {}, threads), m.labels, g.ctx).dump();
}

std::string prime_audit_json(int n, const std::vector<std::string>& labels) {
  std::vector<GroupElement> subset;
  for (const auto& s : labels) subset.push_back(parse_element(s, n));
  return to_json(prime_case_audit(n, subset), n).dump();
}

std::string tau_audit_json(int n, int j, const std::optional<std::string>& vector, std::optional<std::uint64_t> seed) {
  const auto g = generate(n, "tau:" + std::to_string(j), vector, seed);
  return to_json(pair_independence_tau(n, j, g.vector)).dump();
}

Eigen::MatrixXcd orbit_matrix_complex(int n, const std::string& rep, const std::optional<std::string>& vector,
                                      std::optional<std::uint64_t> seed) {
  const auto g = generate(n, rep, vector, seed);
  return orbit_matrix(g.rep, g.vector).rows.to_complex();
}

}  // namespace

PYBIND11_MODULE(_framelab, m) {
  m.doc() = "Exact full-spark certification for dihedral group frames.";
  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def("check_haar", &check_haar_json, py::arg("n"), py::arg("rep") = "kappa", py::arg("vector") = py::none(),
        py::arg("seed") = py::none(), py::arg("mode") = "exact", py::arg("threads") = 0u, py::arg("screen") = true);
  m.def(
      "certify_even", [](int n) { return to_json(even_dependence_certificate(n)).dump(); }, py::arg("n"));
  m.def(
      "chebotarev",
      [](int n, const std::string& mode) {
        py::gil_scoped_release release;
        return to_json(chebotarev_check(n, parse_mode(mode))).dump();
      },
      py::arg("n"), py::arg("mode") = "exact");
  m.def("audit_erasures", &audit_erasures_json, py::arg("n"), py::arg("rep") = "kappa", py::arg("vector") = py::none(),
        py::arg("seed") = py::none(), py::arg("threads") = 0u);
  m.def("prime_audit", &prime_audit_json, py::arg("n"), py::arg("subset"));
  m.def("tau_audit", &tau_audit_json, py::arg("n"), py::arg("j"), py::arg("vector") = py::none(),
        py::arg("seed") = py::none());
  m.def("orbit_matrix", &orbit_matrix_complex, py::arg("n"), py::arg("rep") = "kappa", py::arg("vector") = py::none(),
        py::arg("seed") = py::none());
  m.def(
      "random_vector",
      [](int n, std::size_t dim, std::uint64_t seed) {
        const auto v = random_gaussian_vector(n, dim, seed);
        std::vector<std::string> out;
        for (const auto& x : v) out.push_back(format_cyclo_literal(x, n));
        return out;
      },
      py::arg("n"), py::arg("dim"), py::arg("seed"));
}
