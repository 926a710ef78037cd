// Copyright 2026 The bellcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bellcorr/classical.hpp"
#include "bellcorr/compose.hpp"
#include "bellcorr/errors.hpp"
#include "bellcorr/inequality.hpp"
#include "bellcorr/quantum.hpp"
#include "bellcorr/symmetry.hpp"

namespace py = pybind11;
using namespace bellcorr;

namespace {

// Ids can exceed 64 bits, so they cross the boundary as Python ints via text.
InequalityId to_id(const py::int_ &value) {
    return parse_id(std::string(py::str(value)));
}

py::int_ from_id(const InequalityId &id) {
    return py::int_(py::reinterpret_steal<py::object>(
        PyLong_FromString(id.str().c_str(), nullptr, 10)));
}

std::vector<int> signs_list(const SignTable &f) {
    return {f.signs().begin(), f.signs().end()};
}

SignTable signs_from_list(const std::vector<int> &signs) {
    const int n = log2_exact(signs.size());
    return SignTable(n, std::vector<std::int8_t>(signs.begin(), signs.end()));
}

BellTable table_for(int n, const py::int_ &id) {
    return coefficients_from_signs(id_to_signs(n, to_id(id)));
}

CorrelationVector correlation(const std::vector<double> &xi) {
    return CorrelationVector(log2_exact(xi.size()), xi);
}

py::dict violation_dict(int n, const MaxViolationResult &r, std::uint64_t seed) {
    py::dict d;
    d["n"] = n;
    d["value"] = r.value;
    d["mermin_bound"] = mermin_bound(n);
    d["phi0"] = r.argmax.phi0();
    d["phi"] = r.argmax.phi();
    d["gradient_norm"] = r.gradient_norm;
    d["converged"] = r.converged;
    d["starts"] = r.starts;
    d["seed"] = seed;
    return d;
}

} // namespace

PYBIND11_MODULE(_bellcorr, m) {
    m.doc() = "Full-correlation Bell inequalities: ids, classical bounds, symmetry and quantum violation.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    m.def("inequality_count", [](int n) { return from_id(inequality_count(n)); }, py::arg("n"),
          "Number of extremal inequalities on n sites, 2^(2^n).");

    m.def("id_to_signs", [](int n, const py::int_ &id) { return signs_list(id_to_signs(n, to_id(id))); },
          py::arg("n"), py::arg("id"), "Sign table f(r) indexed by r, site 1 at the low bit.");

    m.def("signs_to_id", [](const std::vector<int> &signs) { return from_id(signs_to_id(signs_from_list(signs))); },
          py::arg("signs"));

    m.def("coefficients", [](int n, const py::int_ &id) { return table_for(n, id).values(); },
          py::arg("n"), py::arg("id"), "Coefficients beta(s) of the inequality.");

    m.def("polynomial", [](int n, const py::int_ &id) { return polynomial_string(table_for(n, id)); },
          py::arg("n"), py::arg("id"));

    m.def("polynomial_id",
          [](const std::string &text, int n) {
              return from_id(signs_to_id(signs_from_coefficients(parse_polynomial(text, n))));
          },
          py::arg("text"), py::arg("n"), "Id of an extremal inequality given as a polynomial.");

    m.def("mermin_id", [](int n) { return from_id(signs_to_id(mermin_signs(n))); }, py::arg("n"));

    m.def("evaluate",
          [](int n, const py::int_ &id, const std::vector<double> &xi) {
              return evaluate(table_for(n, id), correlation(xi));
          },
          py::arg("n"), py::arg("id"), py::arg("xi"));

    m.def("l1_margin", [](const std::vector<double> &xi) { return l1_margin(correlation(xi)); },
          py::arg("xi"), "Largest left-hand side over all inequalities; <= 1 iff classical.");

    m.def("is_classical", [](const std::vector<double> &xi) { return is_classical(correlation(xi)); },
          py::arg("xi"));

    m.def("witness_id", [](const std::vector<double> &xi) { return from_id(signs_to_id(witness(correlation(xi)))); },
          py::arg("xi"), "Id of an inequality attaining the l1 margin.");

    m.def("lp_membership", [](const std::vector<double> &xi) { return lp_membership(correlation(xi)); },
          py::arg("xi"), "Membership by linear programming over the vertices, n <= 4.");

    m.def("group_order", [](int n) { return from_id(group_order(n)); }, py::arg("n"));

    m.def("orbit",
          [](int n, const py::int_ &id) {
              const OrbitSummary o = orbit(id_to_signs(n, to_id(id)));
              return py::make_tuple(o.size, from_id(o.canonical_id));
          },
          py::arg("n"), py::arg("id"), "Orbit size and canonical id.");

    m.def("classify",
          [](int n, bool with_violation, std::uint64_t seed) {
              py::list rows;
              MaxViolationOptions opts;
              opts.seed = seed;
              for (const OrbitRecord &rec : classify_all(n)) {
                  py::dict d;
                  d["n"] = rec.n;
                  d["canonical_id"] = from_id(rec.canonical_id);
                  d["size"] = rec.size;
                  d["permutation_invariant"] = rec.permutation_invariant;
                  d["factorizing"] = rec.factorizing;
                  if (with_violation) {
                      const auto r = max_violation(coefficients_from_signs(id_to_signs(n, rec.canonical_id)), opts);
                      d["max_violation"] = r.value;
                      d["converged"] = r.converged;
                  }
                  rows.append(d);
              }
              return rows;
          },
          py::arg("n"), py::arg("with_violation") = true, py::arg("seed") = MaxViolationOptions{}.seed,
          "One row per orbit of extremal inequalities, n <= 4.");

    m.def("chsh_decompose",
          [](int n, const py::int_ &id) {
              const ChshSplit s = chsh_decompose(table_for(n, id));
              return py::make_tuple(s.b0.values(), s.b1.values());
          },
          py::arg("n"), py::arg("id"), "Splits off the last site into two (n-1)-site tables.");

    m.def("violation_value",
          [](int n, const py::int_ &id, double phi0, const std::vector<double> &phi) {
              return violation_value(table_for(n, id), PhaseVector(phi, phi0));
          },
          py::arg("n"), py::arg("id"), py::arg("phi0"), py::arg("phi"));

    m.def("max_violation",
          [](int n, const py::int_ &id, std::uint64_t seed, int random_starts, int max_iterations) {
              MaxViolationOptions opts;
              opts.seed = seed;
              opts.random_starts = random_starts;
              opts.max_iterations = max_iterations;
              return violation_dict(n, max_violation(table_for(n, id), opts), seed);
          },
          py::arg("n"), py::arg("id"), py::arg("seed") = MaxViolationOptions{}.seed,
          py::arg("random_starts") = MaxViolationOptions{}.random_starts,
          py::arg("max_iterations") = MaxViolationOptions{}.max_iterations,
          "Maximal GHZ-family violation over local phases.");

    m.def("mermin_bound", &mermin_bound, py::arg("n"));

    m.def("ghz_correlations",
          [](double phi0, const std::vector<double> &phi) {
              const PhaseVector phases(phi, phi0);
              const CorrelationVector xi =
                  simulate_correlations(ghz_state(phases.n()), ghz_observables(phases));
              return std::vector<double>(xi.values().begin(), xi.values().end());
          },
          py::arg("phi0"), py::arg("phi"), "Correlations of the GHZ state measured by the simulator.");

    m.def("ghz_extreme_point",
          [](double phi0, const std::vector<double> &phi) {
              const CorrelationVector xi = extreme_point_q(PhaseVector(phi, phi0));
              return std::vector<double>(xi.values().begin(), xi.values().end());
          },
          py::arg("phi0"), py::arg("phi"), "Closed-form GHZ correlations.");

    m.def("ppt_check",
          [](int n, int states, int specs, std::uint64_t seed, int terms) {
              const PptCheckReport r = ppt_property_check(n, states, specs, seed, terms);
              py::dict d;
              d["n"] = r.n;
              d["states"] = r.states;
              d["observable_specs"] = r.observable_specs;
              d["seed"] = r.seed;
              d["max_value"] = r.max_value;
              d["max_margin"] = r.max_margin;
              d["min_pt_eigenvalue"] = r.min_pt_eigenvalue;
              d["passed"] = r.passed;
              return d;
          },
          py::arg("n") = 3, py::arg("states") = 200, py::arg("specs") = 50, py::arg("seed") = 1,
          py::arg("terms") = 4);
}
