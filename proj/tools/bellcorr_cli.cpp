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

// bellcorr command-line front end.
//
// Exit codes: 0 success, 1 a property check failed, 2 invalid input,
// 3 numeric nonconvergence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bellcorr/classical.hpp"
#include "bellcorr/compose.hpp"
#include "bellcorr/errors.hpp"
#include "bellcorr/inequality.hpp"
#include "bellcorr/quantum.hpp"
#include "bellcorr/symmetry.hpp"

using json = nlohmann::ordered_json;
using namespace bellcorr;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonconvergence = 3;

enum class Format { json, csv };

std::string csv_cell(const json &v) {
    std::string text;
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        text = v.get<std::string>();
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                text += ';';
            }
            text += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
    } else {
        text = v.dump();
    }
    if (text.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : text) {
            quoted += c;
            if (c == '"') {
                quoted += '"';
            }
        }
        return quoted + "\"";
    }
    return text;
}

// Writes one JSON object per line, or CSV with a header taken from the
// first record.
class Emitter {
  public:
    explicit Emitter(Format format) : format_(format) {}

    void record(const json &obj) {
        if (format_ == Format::json) {
            std::cout << obj.dump() << '\n';
            return;
        }
        if (!header_done_) {
            bool first = true;
            for (const auto &item : obj.items()) {
                std::cout << (first ? "" : ",") << item.key();
                first = false;
            }
            std::cout << '\n';
            header_done_ = true;
        }
        bool first = true;
        for (const auto &item : obj.items()) {
            std::cout << (first ? "" : ",") << csv_cell(item.value());
            first = false;
        }
        std::cout << '\n';
    }

  private:
    Format format_;
    bool header_done_ = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json parse_json_text(const std::string &text, const std::string &what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(what + ": " + e.what());
    }
}

CorrelationVector read_correlations(const std::string &path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return correlation_from_json(parse_json_text(text, path));
    }
    return correlation_from_csv(text);
}

json phases_json(const PhaseVector &p) { return {{"phi0", p.phi0()}, {"phi", p.phi()}}; }

// Inequality selection shared by `violation` and `id`.
struct TableInput {
    int n = 0;
    std::string id;
    std::string polynomial;
    std::string signs;
    std::string table_file;
    bool mermin = false;

    void add_to(CLI::App *cmd, bool with_id) {
        cmd->add_option("-n,--sites", n, "Number of sites")->check(CLI::Range(1, kMaxSites));
        if (with_id) {
            cmd->add_option("--id", id, "Inequality id (decimal)");
        }
        cmd->add_option("--polynomial", polynomial, "Bell polynomial, e.g. \"1/2 a1 b1 + ...\"");
        cmd->add_option("--signs", signs, "Sign table as a +/- string indexed by r");
        cmd->add_option("--table", table_file, "BellTable JSON file");
        cmd->add_flag("--mermin", mermin, "The Mermin table on n sites");
    }

    BellTable resolve() const {
        const int given = !id.empty() + !polynomial.empty() + !signs.empty() + !table_file.empty() + mermin;
        if (given != 1) {
            throw ParseError("give exactly one of --id, --polynomial, --signs, --table, --mermin");
        }
        if (!signs.empty()) {
            const SignTable f = SignTable::parse(signs);
            if (n != 0 && f.n() != n) {
                throw DimensionError("--signs has " + std::to_string(f.size()) + " entries, not 2^n");
            }
            return coefficients_from_signs(f);
        }
        if (!table_file.empty()) {
            const BellTable beta = bell_table_from_json(parse_json_text(read_file(table_file), table_file));
            if (n != 0 && beta.n() != n) {
                throw DimensionError("table file is for n=" + std::to_string(beta.n()));
            }
            return beta;
        }
        if (n == 0) {
            throw ParseError("-n is required with --id, --polynomial and --mermin");
        }
        if (!id.empty()) {
            return coefficients_from_signs(id_to_signs(n, parse_id(id)));
        }
        if (mermin) {
            return coefficients_from_signs(mermin_signs(n));
        }
        return parse_polynomial(polynomial, n);
    }
};

json enumerate_record(int n, const InequalityId &id) {
    const SignTable f = id_to_signs(n, id);
    return {{"n", n},
            {"id", id_to_json(id)},
            {"polynomial", polynomial_string(coefficients_from_signs(f))},
            {"signs", f.to_string()}};
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multipartite Bell correlation inequalities: numbering, orbits, classical "
                 "membership and quantum violations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // enumerate
    auto *enumerate = app.add_subcommand("enumerate", "List inequalities with their polynomials");
    int en_n = 0;
    std::string en_id;
    bool en_all = false;
    std::string en_first = "0";
    std::uint64_t en_count = 0;
    enumerate->add_option("-n,--sites", en_n, "Number of sites")->required()->check(CLI::Range(1, 16));
    enumerate->add_option("--id", en_id, "A single inequality id");
    enumerate->add_flag("--all", en_all, "Every id for n <= 6, in increasing order");
    enumerate->add_option("--first", en_first, "First id of a range")->capture_default_str();
    enumerate->add_option("--count", en_count, "Number of ids in the range");

    // classify
    auto *classify = app.add_subcommand("classify", "Orbit table with maximal violations");
    int cl_n = 0;
    std::uint64_t cl_seed = MaxViolationOptions{}.seed;
    bool cl_skip_violation = false;
    classify->add_option("-n,--sites", cl_n, "Number of sites")
        ->required()
        ->check(CLI::Range(1, kMaxCensusSites));
    classify->add_option("--seed", cl_seed, "Optimizer seed")->capture_default_str();
    classify->add_flag("--no-violation", cl_skip_violation, "Skip the optimizer");

    // membership
    auto *membership = app.add_subcommand("membership", "Classical membership of a correlation vector");
    std::string mb_input;
    std::vector<double> mb_xi;
    membership->add_option("input", mb_input, "CorrelationVector JSON or CSV file");
    membership->add_option("--xi", mb_xi, "Comma-separated correlation vector")->delimiter(',');

    // violation
    auto *violation = app.add_subcommand("violation", "Maximal quantum violation of one inequality");
    TableInput vi_table;
    vi_table.add_to(violation, true);
    MaxViolationOptions vi_opts;
    violation->add_option("--seed", vi_opts.seed, "Optimizer seed")->capture_default_str();
    violation->add_option("--random-starts", vi_opts.random_starts, "Random starting points")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    violation->add_option("--max-iterations", vi_opts.max_iterations, "Ascent steps per start")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // ghz
    auto *ghz = app.add_subcommand("ghz", "GHZ correlations and observables for given phases");
    int gz_n = 0;
    double gz_phi0 = 0.0;
    std::vector<double> gz_phi;
    ghz->add_option("-n,--sites", gz_n, "Number of sites")
        ->required()
        ->check(CLI::Range(1, kMaxSimulatorSites));
    ghz->add_option("--phi0", gz_phi0, "Global phase")->capture_default_str();
    ghz->add_option("--phi", gz_phi, "Comma-separated site phases")->required()->delimiter(',');

    // id
    auto *id_cmd = app.add_subcommand("id", "Number of an inequality");
    TableInput id_table;
    id_table.add_to(id_cmd, false);

    // ppt-check
    auto *ppt = app.add_subcommand("ppt-check", "Separable states never violate an inequality");
    int pp_n = 3;
    int pp_states = 200;
    int pp_specs = 50;
    int pp_terms = 4;
    std::uint64_t pp_seed = 1;
    ppt->add_option("-n,--sites", pp_n, "Number of qubits")
        ->capture_default_str()
        ->check(CLI::Range(1, kMaxDensitySites));
    ppt->add_option("--states", pp_states, "Separable states")->capture_default_str()->check(CLI::PositiveNumber);
    ppt->add_option("--specs", pp_specs, "Observable specs per state")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    ppt->add_option("--terms", pp_terms, "Product terms per state")->capture_default_str()->check(CLI::PositiveNumber);
    ppt->add_option("--seed", pp_seed, "Sampling seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }
    const Format format = format_name == "csv" ? Format::csv : Format::json;
    Emitter out(format);

    try {
        if (*enumerate) {
            const int modes = !en_id.empty() + en_all + (en_count > 0);
            if (modes != 1) {
                throw ParseError("give exactly one of --id, --all, --count");
            }
            if (!en_id.empty()) {
                out.record(enumerate_record(en_n, parse_id(en_id)));
                return 0;
            }
            if (en_n > 6) {
                throw RangeError("ranges are limited to n <= 6");
            }
            const InequalityId last = inequality_count(en_n) - 1;
            InequalityId id = en_all ? InequalityId(0) : parse_id(en_first);
            const InequalityId stop = en_all ? last : id + en_count - 1;
            if (stop > last) {
                throw RangeError("range runs past the last id " + last.str());
            }
            for (; id <= stop; ++id) {
                out.record(enumerate_record(en_n, id));
            }
            return 0;
        }

        if (*classify) {
            bool converged = true;
            MaxViolationOptions opts;
            opts.seed = cl_seed;
            for (const OrbitRecord &rec : classify_all(cl_n)) {
                json row = {{"n", rec.n},
                            {"canonical_id", id_to_json(rec.canonical_id)},
                            {"size", rec.size},
                            {"permutation_invariant", rec.permutation_invariant},
                            {"factorizing", rec.factorizing},
                            {"max_violation", nullptr},
                            {"converged", nullptr}};
                if (!cl_skip_violation) {
                    const auto r = max_violation(coefficients_from_signs(id_to_signs(cl_n, rec.canonical_id)), opts);
                    row["max_violation"] = r.value;
                    row["converged"] = r.converged;
                    converged = converged && r.converged;
                }
                row["seed"] = cl_seed;
                out.record(row);
            }
            return converged ? 0 : kExitNonconvergence;
        }

        if (*membership) {
            if (mb_input.empty() == mb_xi.empty()) {
                throw ParseError("give a CorrelationVector file or --xi");
            }
            const CorrelationVector xi =
                mb_xi.empty() ? read_correlations(mb_input)
                              : CorrelationVector(log2_exact(mb_xi.size()), mb_xi);
            const SignTable w = witness(xi);
            const double margin = l1_margin(xi);
            json obj = {{"n", xi.n()},
                        {"margin", margin},
                        {"member", margin <= 1.0 + kMembershipTolerance},
                        {"witness_id", id_to_json(signs_to_id(w))},
                        {"witness_value", evaluate(coefficients_from_signs(w), xi)}};
            obj["witness_orbit"] = xi.n() <= kMaxOrbitSites ? json(id_to_json(orbit(w).canonical_id)) : json();
            obj["lp_member"] = xi.n() <= 4 ? json(lp_membership(xi)) : json();
            out.record(obj);
            return 0;
        }

        if (*violation) {
            const BellTable beta = vi_table.resolve();
            const auto r = max_violation(beta, vi_opts);
            json obj = {{"n", beta.n()}};
            obj["id"] = beta.is_extremal() ? json(id_to_json(signs_to_id(signs_from_coefficients(beta)))) : json();
            obj["value"] = r.value;
            obj["mermin_bound"] = mermin_bound(beta.n());
            obj["argmax"] = phases_json(r.argmax);
            obj["gradient_norm"] = r.gradient_norm;
            obj["converged"] = r.converged;
            obj["starts"] = r.starts;
            obj["seed"] = vi_opts.seed;
            out.record(obj);
            return r.converged ? 0 : kExitNonconvergence;
        }

        if (*ghz) {
            if (static_cast<int>(gz_phi.size()) != gz_n) {
                throw DimensionError("--phi needs " + std::to_string(gz_n) + " values");
            }
            const PhaseVector phases(gz_phi, gz_phi0);
            const ObservableSpec obs = ghz_observables(phases);
            const CorrelationVector xi = simulate_correlations(ghz_state(gz_n), obs);
            const CorrelationVector target = extreme_point_q(phases);
            double deviation = 0.0;
            for (std::size_t s = 0; s < xi.size(); ++s) {
                deviation = std::max(deviation, std::abs(xi[s] - target[s]));
            }
            json obj = {{"n", gz_n}, {"phases", phases_json(phases)}};
            obj["correlations"] = std::vector<double>(xi.values().begin(), xi.values().end());
            obj["observables"] = obs.to_json();
            obj["max_deviation"] = deviation;
            out.record(obj);
            return 0;
        }

        if (*id_cmd) {
            const BellTable beta = id_table.resolve();
            const SignTable f = signs_from_coefficients(beta);
            out.record({{"n", f.n()}, {"id", id_to_json(signs_to_id(f))}, {"signs", f.to_string()}});
            return 0;
        }

        if (*ppt) {
            const PptCheckReport r = ppt_property_check(pp_n, pp_states, pp_specs, pp_seed, pp_terms);
            out.record({{"n", r.n},
                        {"states", r.states},
                        {"observable_specs", r.observable_specs},
                        {"terms", pp_terms},
                        {"seed", r.seed},
                        {"max_value", r.max_value},
                        {"max_margin", r.max_margin},
                        {"min_pt_eigenvalue", r.min_pt_eigenvalue},
                        {"passed", r.passed}});
            return r.passed ? 0 : kExitCheckFailed;
        }
    } catch (const SolverError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonconvergence;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
