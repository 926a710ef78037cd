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

#include "bellcorr/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bellcorr {

CorrelationVector::CorrelationVector(int n, std::vector<double> xi) : n_(n), xi_(std::move(xi)) {
    if (n < 1 || n > kMaxSites) {
        throw RangeError("CorrelationVector: site count " + std::to_string(n) + " out of range");
    }
    if (xi_.size() != table_size(n)) {
        throw DimensionError("CorrelationVector: expected " + std::to_string(table_size(n)) +
                             " entries, got " + std::to_string(xi_.size()));
    }
    for (std::size_t s = 0; s < xi_.size(); ++s) {
        if (!std::isfinite(xi_[s]) || std::abs(xi_[s]) > 1.0 + kSlack) {
            throw RangeError("CorrelationVector: entry " + std::to_string(s) +
                             " is outside [-1, 1]");
        }
    }
}

CorrelationVector CorrelationVector::zero(int n) {
    return CorrelationVector(n, std::vector<double>(table_size(n), 0.0));
}

CorrelationVector CorrelationVector::scaled(double factor) const {
    std::vector<double> out = xi_;
    for (double &x : out) {
        x *= factor;
    }
    return CorrelationVector(n_, std::move(out));
}

ClassicalModel::ClassicalModel(int n, std::vector<ClassicalVertex> vertices)
    : n_(n), vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw RangeError("ClassicalModel: no vertices");
    }
    double total = 0.0;
    for (const auto &v : vertices_) {
        if (v.r.n() != n) {
            throw DimensionError("ClassicalModel: vertex on a different site count");
        }
        if (v.sign != 1 && v.sign != -1) {
            throw RangeError("ClassicalModel: vertex sign must be +-1");
        }
        if (!(v.weight >= 0.0)) {
            throw RangeError("ClassicalModel: negative weight");
        }
        total += v.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw RangeError("ClassicalModel: weights sum to " + std::to_string(total) + ", not 1");
    }
}

CorrelationVector extreme_point(const BitString &r, int sign) {
    if (sign != 1 && sign != -1) {
        throw RangeError("extreme_point: sign must be +-1");
    }
    std::vector<double> xi(table_size(r.n()));
    for (std::size_t s = 0; s < xi.size(); ++s) {
        xi[s] = sign * character(r.bits(), s);
    }
    return CorrelationVector(r.n(), std::move(xi));
}

CorrelationVector mix(const ClassicalModel &model) {
    std::vector<double> xi(table_size(model.n()), 0.0);
    for (const auto &v : model.vertices()) {
        for (std::size_t s = 0; s < xi.size(); ++s) {
            xi[s] += v.weight * v.sign * character(v.r.bits(), s);
        }
    }
    // Round-off may push a coordinate a hair past +-1.
    for (double &x : xi) {
        x = std::clamp(x, -1.0, 1.0);
    }
    return CorrelationVector(model.n(), std::move(xi));
}

std::vector<double> spectrum(const CorrelationVector &xi) {
    std::vector<double> hat = walsh_hadamard(xi.values());
    for (double &x : hat) {
        x = std::ldexp(x, -xi.n());
    }
    return hat;
}

double l1_margin(const CorrelationVector &xi) {
    double sum = 0.0;
    for (double x : spectrum(xi)) {
        sum += std::abs(x);
    }
    return sum;
}

SignTable witness(const CorrelationVector &xi) {
    const auto hat = spectrum(xi);
    std::vector<std::int8_t> f(hat.size());
    for (std::size_t r = 0; r < hat.size(); ++r) {
        f[r] = hat[r] < 0.0 ? -1 : 1;
    }
    return SignTable(xi.n(), std::move(f));
}

double evaluate(const BellTable &beta, const CorrelationVector &xi) {
    return evaluate(beta, xi.values());
}

namespace {

// Phase-one simplex on  A x = b, x >= 0  with Bland's rule. Returns the
// minimal total artificial mass; zero (up to round-off) means feasible.
double phase_one_residual(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    const std::size_t width = cols + rows;
    constexpr double eps = 1e-12;

    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (double &x : a[i]) {
                x = -x;
            }
        }
        a[i].resize(width, 0.0);
        a[i][cols + i] = 1.0;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        basis[i] = cols + i;
    }
    // Reduced costs of the phase-one objective sum(artificials).
    std::vector<double> cost(width, 0.0);
    double objective = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        objective += b[i];
        for (std::size_t j = 0; j < cols; ++j) {
            cost[j] -= a[i][j];
        }
    }

    const std::size_t max_pivots = 50 * width;
    for (std::size_t pivot = 0; pivot < max_pivots; ++pivot) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (cost[j] < -eps) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            // Recompute from the basis rather than trusting the running sum.
            objective = 0.0;
            for (std::size_t i = 0; i < rows; ++i) {
                if (basis[i] >= cols) {
                    objective += b[i];
                }
            }
            if (!std::isfinite(objective)) {
                throw SolverError("lp_membership: non-finite objective");
            }
            return objective;
        }
        std::size_t leave = rows;
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (a[i][enter] > eps) {
                const double ratio = b[i] / a[i][enter];
                if (leave == rows || ratio < best - eps ||
                    (std::abs(ratio - best) <= eps && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave == rows) {
            throw SolverError("lp_membership: unbounded phase-one problem");
        }
        const double p = a[leave][enter];
        for (double &x : a[leave]) {
            x /= p;
        }
        b[leave] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || a[i][enter] == 0.0) {
                continue;
            }
            const double factor = a[i][enter];
            for (std::size_t j = 0; j < width; ++j) {
                a[i][j] -= factor * a[leave][j];
            }
            b[i] -= factor * b[leave];
        }
        const double factor = cost[enter];
        for (std::size_t j = 0; j < width; ++j) {
            cost[j] -= factor * a[leave][j];
        }
        objective += factor * b[leave];
        basis[leave] = enter;
    }
    throw SolverError("lp_membership: pivot limit reached");
}

} // namespace

bool lp_membership(const CorrelationVector &xi) {
    if (xi.n() > 4) {
        throw RangeError("lp_membership supports n <= 4");
    }
    const std::size_t dim = xi.size();
    const std::size_t vertices = 2 * dim;
    std::vector<std::vector<double>> a(dim + 1, std::vector<double>(vertices, 0.0));
    std::vector<double> b(dim + 1, 0.0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
            const double e = character(r, s);
            a[s][2 * r] = e;
            a[s][2 * r + 1] = -e;
        }
    }
    for (std::size_t s = 0; s < dim; ++s) {
        b[s] = xi[s];
    }
    for (std::size_t j = 0; j < vertices; ++j) {
        a[dim][j] = 1.0;
    }
    b[dim] = 1.0;
    return phase_one_residual(std::move(a), std::move(b)) <= 1e-9;
}

nlohmann::json to_json(const CorrelationVector &xi) {
    return {{"n", xi.n()}, {"xi", std::vector<double>(xi.values().begin(), xi.values().end())}};
}

CorrelationVector correlation_from_json(const nlohmann::json &j) {
    try {
        return CorrelationVector(j.at("n").get<int>(), j.at("xi").get<std::vector<double>>());
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("CorrelationVector JSON: ") + e.what());
    }
}

CorrelationVector correlation_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<double> values;
    bool have_row = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(cells, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
                    numeric = false;
                }
            } catch (const std::exception &) {
                numeric = false;
            }
        }
        if (!numeric) {
            if (have_row || !values.empty()) {
                throw ParseError("CorrelationVector CSV: non-numeric data row");
            }
            continue; // header
        }
        if (have_row) {
            throw ParseError("CorrelationVector CSV: expected a single data row");
        }
        values = std::move(row);
        have_row = true;
    }
    if (!have_row) {
        throw ParseError("CorrelationVector CSV: no data row");
    }
    const int n = log2_exact(values.size());
    return CorrelationVector(n, std::move(values));
}

} // namespace bellcorr
