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

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellcorr/inequality.hpp"
#include "bellcorr/transform.hpp"

namespace bellcorr {

/// Full correlations xi(s) = <prod_k A_k(s_k)>, indexed by the choice string s.
class CorrelationVector {
  public:
    /// Entries may exceed [-1, 1] by at most this much (floating round-off).
    static constexpr double kSlack = 1e-12;

    CorrelationVector() = default;
    CorrelationVector(int n, std::vector<double> xi);

    static CorrelationVector zero(int n);

    int n() const { return n_; }
    std::size_t size() const { return xi_.size(); }
    double operator[](std::size_t s) const { return xi_[s]; }
    std::span<const double> values() const { return xi_; }

    CorrelationVector scaled(double factor) const;

  private:
    int n_ = 0;
    std::vector<double> xi_;
};

/// One vertex of the classical polytope: deterministic configuration r and
/// overall sign.
struct ClassicalVertex {
    BitString r;
    int sign = 1;
    double weight = 0.0;
};

/// Probability distribution over classical vertices.
class ClassicalModel {
  public:
    ClassicalModel(int n, std::vector<ClassicalVertex> vertices);

    int n() const { return n_; }
    const std::vector<ClassicalVertex> &vertices() const { return vertices_; }

  private:
    int n_;
    std::vector<ClassicalVertex> vertices_;
};

/// xi(s) = sign * (-1)^<r,s>
CorrelationVector extreme_point(const BitString &r, int sign);

CorrelationVector mix(const ClassicalModel &model);

/// xi_hat(r) = 2^-n sum_s (-1)^<r,s> xi(s)
std::vector<double> spectrum(const CorrelationVector &xi);

/// sum_r |xi_hat(r)|. The vector has a local classical model iff this is <= 1.
double l1_margin(const CorrelationVector &xi);

inline constexpr double kMembershipTolerance = 1e-10;

inline bool is_classical(const CorrelationVector &xi, double tolerance = kMembershipTolerance) {
    return l1_margin(xi) <= 1.0 + tolerance;
}

/// Sign pattern of the spectrum (zero maps to +1); its inequality attains
/// l1_margin(xi) on xi.
SignTable witness(const CorrelationVector &xi);

double evaluate(const BellTable &beta, const CorrelationVector &xi);

/// Independent check of classical membership: solves the feasibility LP
/// "xi is a convex combination of the 2^(n+1) vertices" with a dense
/// phase-one simplex. Requires n <= 4. Throws SolverError if the simplex
/// breaks down.
bool lp_membership(const CorrelationVector &xi);

nlohmann::json to_json(const CorrelationVector &xi);
CorrelationVector correlation_from_json(const nlohmann::json &j);
/// One row of 2^n comma-separated numbers ordered by s; an optional header
/// row is skipped. Multiple data rows are rejected.
CorrelationVector correlation_from_csv(std::string_view text);

} // namespace bellcorr
