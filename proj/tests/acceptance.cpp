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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bellcorr/classical.hpp"
#include "bellcorr/compose.hpp"
#include "bellcorr/errors.hpp"
#include "bellcorr/inequality.hpp"
#include "bellcorr/quantum.hpp"
#include "bellcorr/symmetry.hpp"

#include "census_tables.hpp"

using namespace bellcorr;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

BellTable from_id(int n, std::uint64_t id) { return coefficients_from_signs(id_to_signs(n, id)); }

Outcome group_orders() {
    const std::vector<std::uint64_t> expect = {64, 768, 12288, 245760};
    for (int n = 2; n <= 5; ++n) {
        if (group_order(n) != expect[n - 2]) {
            return {false, fmt("n=%d gives %s", n, group_order(n).str().c_str())};
        }
    }
    return {true, "64, 768, 12288, 245760"};
}

Outcome census(int n, const std::vector<testing::CensusRow> &table, double time_limit) {
    const auto start = Clock::now();
    const auto records = classify_all(n);
    const double elapsed = seconds_since(start);
    if (records.size() != table.size()) {
        return {false, fmt("%zu orbits, expected %zu", records.size(), table.size())};
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto &rec = records[i];
        const auto &row = table[i];
        bool ok = rec.canonical_id == row.id && rec.size == row.size;
        if (n == 4) {
            ok = ok && rec.permutation_invariant == row.p && rec.factorizing == row.f;
        }
        if (!ok) {
            return {false, fmt("row %zu: id %s size %llu, expected id %llu size %llu", i,
                               rec.canonical_id.str().c_str(),
                               static_cast<unsigned long long>(rec.size),
                               static_cast<unsigned long long>(row.id),
                               static_cast<unsigned long long>(row.size))};
        }
        total += rec.size;
    }
    if (total != (std::uint64_t{1} << table_size(n))) {
        return {false, fmt("orbit sizes sum to %llu", static_cast<unsigned long long>(total))};
    }
    return {elapsed < time_limit,
            fmt("%zu orbits, sizes sum to %llu, %.3f s (limit %.0f s)", records.size(),
                static_cast<unsigned long long>(total), elapsed, time_limit)};
}

struct ViolationRun {
    std::vector<double> n3;
    std::vector<double> n4;
    double seconds = 0.0;
    bool converged = true;
};

ViolationRun run_violations() {
    ViolationRun run;
    const auto start = Clock::now();
    for (const auto &row : testing::census_n3()) {
        const auto r = max_violation(from_id(3, row.id));
        run.n3.push_back(r.value);
        run.converged = run.converged && r.converged;
    }
    for (const auto &row : testing::census_n4()) {
        const auto r = max_violation(from_id(4, row.id));
        run.n4.push_back(r.value);
        run.converged = run.converged && r.converged;
    }
    run.seconds = seconds_since(start);
    return run;
}

Outcome violations(const ViolationRun &run) {
    double worst = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const auto &table = pass == 0 ? testing::census_n3() : testing::census_n4();
        const auto &values = pass == 0 ? run.n3 : run.n4;
        for (std::size_t i = 0; i < table.size(); ++i) {
            const double err = std::abs(values[i] - table[i].violation);
            if (err > table[i].tolerance) {
                return {false, fmt("n=%d id %llu: %.9f vs %.9f", pass + 3,
                                   static_cast<unsigned long long>(table[i].id), values[i],
                                   table[i].violation)};
            }
            if (table[i].tolerance == testing::kExact) {
                worst = std::max(worst, err);
            }
        }
    }
    return {run.seconds < 300.0 && run.converged,
            fmt("44 orbits, worst closed-form error %.1e, all converged: %s, %.1f s (limit 300 s)",
                worst, run.converged ? "yes" : "no", run.seconds)};
}

Outcome mermin_uniqueness(const ViolationRun &run) {
    for (int pass = 0; pass < 2; ++pass) {
        const int n = pass + 3;
        const auto &table = pass == 0 ? testing::census_n3() : testing::census_n4();
        const auto &values = pass == 0 ? run.n3 : run.n4;
        const std::uint64_t expect_id = n == 3 ? 23 : 6014;
        double best = 0.0;
        int attaining = 0;
        std::uint64_t attained_by = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            best = std::max(best, values[i]);
            if (std::abs(values[i] - mermin_bound(n)) <= 1e-6) {
                ++attaining;
                attained_by = table[i].id;
            }
        }
        if (std::abs(best - mermin_bound(n)) > 1e-6 || attaining != 1 || attained_by != expect_id) {
            return {false, fmt("n=%d: max %.9f, %d orbits at the bound", n, best, attaining)};
        }
    }
    return {true, "n=3 max 2 only at id 23; n=4 max 2.828427125 only at id 6014"};
}

Outcome numbering() {
    const auto start = Clock::now();
    const InequalityId target = parse_id("1692930046964590721");
    const SignTable mermin = mermin_signs(6);
    const bool direct = signs_to_id(mermin) == target;
    const bool member = in_same_orbit(id_to_signs(6, target), mermin);
    const double elapsed = seconds_since(start);
    return {direct && member && elapsed < 60.0,
            fmt("direct id match: %s, orbit membership: %s, %.2f s", direct ? "yes" : "no",
                member ? "yes" : "no", elapsed)};
}

Outcome membership_oracles() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_real_distribution<double> target(0.0, 1.5);
    int checked = 0;
    int skipped = 0;
    int disagreements = 0;
    int members = 0;
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i < 10000; ++i) {
            std::vector<double> xi(table_size(n));
            for (double &x : xi) {
                x = box(rng);
            }
            CorrelationVector v(n, std::move(xi));
            // Spread the l1 margins over [0, 1.5] so both sides are well sampled.
            const double m = l1_margin(v);
            v = v.scaled(std::min(target(rng) / m, 1.0));
            const double margin = l1_margin(v);
            if (std::abs(margin - 1.0) <= 1e-9) {
                ++skipped;
                continue;
            }
            const bool by_margin = margin <= 1.0;
            members += by_margin;
            disagreements += by_margin != lp_membership(v);
            ++checked;
        }
    }
    return {disagreements == 0 && checked >= 19000,
            fmt("%d vectors (%d inside), %d in the boundary band, %d disagreements", checked,
                members, skipped, disagreements)};
}

Outcome ghz_attainment() {
    const auto start = Clock::now();
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < 100; ++i) {
            std::vector<double> phi(n);
            for (double &x : phi) {
                x = angle(rng);
            }
            const PhaseVector phases(std::move(phi), angle(rng));
            const auto xi = simulate_correlations(ghz_state(n), ghz_observables(phases));
            const auto target = extreme_point_q(phases);
            for (std::size_t s = 0; s < xi.size(); ++s) {
                worst = std::max(worst, std::abs(xi[s] - target[s]));
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-10 && elapsed < 30.0,
            fmt("400 phase vectors, worst deviation %.1e, %.2f s", worst, elapsed)};
}

Outcome norm_routes() {
    std::mt19937_64 rng(9);
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i < 100; ++i) {
            const BellTable beta = from_id(n, rng() % (std::uint64_t{1} << table_size(n)));
            const auto obs = random_bloch_observables(n, rng);
            const auto routes = bell_operator_norm_routes(beta, obs);
            worst = std::max(worst, std::abs(routes.dense - routes.spectral));
        }
    }
    return {worst <= 1e-8, fmt("200 instances, worst route difference %.1e", worst)};
}

Outcome ppt_property() {
    const auto start = Clock::now();
    const PptCheckReport report = ppt_property_check(3, 200, 50, 10);
    const double elapsed = seconds_since(start);
    const bool ok = report.max_value <= 1.0 + 1e-9 && report.min_pt_eigenvalue >= -1e-10;
    return {ok && elapsed < 300.0,
            fmt("200 states x 50 specs x 256 tables, max value %.12f, min PT eigenvalue %.1e, "
                "seed %llu, %.1f s",
                report.max_value, report.min_pt_eigenvalue,
                static_cast<unsigned long long>(report.seed), elapsed)};
}

Outcome nesting() {
    for (int n = 3; n <= 4; ++n) {
        const std::uint64_t count = std::uint64_t{1} << table_size(n);
        for (std::uint64_t id = 0; id < count; ++id) {
            const BellTable beta = from_id(n, id);
            try {
                const NestingTree tree = full_nesting(beta);
                if (!(tree.expand() == beta) || tree.depth() != n - 1) {
                    return {false, fmt("n=%d id %llu does not reconstruct", n,
                                       static_cast<unsigned long long>(id))};
                }
            } catch (const Error &e) {
                return {false, fmt("n=%d id %llu: %s", n, static_cast<unsigned long long>(id), e.what())};
            }
        }
    }
    return {true, "256 (n=3) and 65536 (n=4) tables nest and reconstruct exactly"};
}

Outcome gradients() {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    const double h = 1e-6;
    double worst = 0.0;
    double worst_flat = 0.0;
    int flat = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 4;
        const BellTable beta = from_id(n, rng() % (std::uint64_t{1} << table_size(n)));
        std::vector<double> phi(n);
        for (double &x : phi) {
            x = angle(rng);
        }
        const Eigen::VectorXd g = squared_modulus(beta, phi).gradient;
        Eigen::VectorXd fd(n);
        for (int k = 0; k < n; ++k) {
            auto up = phi;
            auto down = phi;
            up[k] += h;
            down[k] -= h;
            fd[k] = (squared_modulus(beta, up).value - squared_modulus(beta, down).value) / (2 * h);
        }
        if (g.norm() == 0.0) {
            // Constant |T|^2 (e.g. the product inequality): no relative scale.
            ++flat;
            worst_flat = std::max(worst_flat, fd.norm());
            continue;
        }
        worst = std::max(worst, (g - fd).norm() / g.norm());
    }
    return {worst <= 1e-5 && worst_flat <= 1e-8,
            fmt("100 instances, worst relative difference %.1e; %d with zero gradient, "
                "largest finite difference there %.1e",
                worst, flat, worst_flat)};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char *name, const std::function<Outcome()> &check) {
        Outcome out;
        try {
            out = check();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += !out.pass;
        std::printf("[%s] criterion %2d  %-32s %s\n", out.pass ? "PASS" : "FAIL", id, name,
                    out.detail.c_str());
        std::fflush(stdout);
    };

    report(1, "group orders", group_orders);
    report(2, "orbit census n=3", [] { return census(3, testing::census_n3(), 1.0); });
    report(3, "orbit census n=4", [] { return census(4, testing::census_n4(), 120.0); });
    const ViolationRun run = run_violations();
    report(4, "maximal violations n=3,4", [&] { return violations(run); });
    report(5, "Mermin bound and uniqueness", [&] { return mermin_uniqueness(run); });
    report(6, "Mermin n=6 numbering", numbering);
    report(7, "membership oracle equivalence", membership_oracles);
    report(8, "GHZ attainment", ghz_attainment);
    report(9, "norm formula equivalence", norm_routes);
    report(10, "PPT property", ppt_property);
    report(11, "CHSH nesting", nesting);
    report(12, "gradient correctness", gradients);

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
