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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellcorr/inequality.hpp"

namespace bellcorr {

/// Element of the symmetry group acting on sign tables:
///   f'(r) = global * (-1)^<s0, pi(r)> * f(pi(r) xor r0)
/// where pi(r) has bit k equal to bit perm[k] of r (0-based sites).
/// r0 swaps the two observables at a site, s0 flips the outcome sign of
/// the second observable, global flips every outcome.
struct GroupElement {
    std::vector<int> perm;
    std::uint32_t r0 = 0;
    std::uint32_t s0 = 0;
    int global = 1;

    static GroupElement identity(int n);
    int n() const { return static_cast<int>(perm.size()); }
    bool operator==(const GroupElement &) const = default;
};

/// Bit k of the result is bit perm[k] of `bits`.
std::uint32_t permute_bits(const std::vector<int> &perm, std::uint32_t bits);

/// compose(g, h) acts as "h first, then g".
GroupElement compose(const GroupElement &g, const GroupElement &h);
GroupElement inverse(const GroupElement &g);
GroupElement random_group_element(int n, std::mt19937_64 &rng);

SignTable apply(const GroupElement &g, const SignTable &f);

/// n! * 2^(2n+1)
InequalityId group_order(int n);

struct OrbitSummary {
    std::uint64_t size = 0;
    InequalityId canonical_id;
    SignTable canonical;
};

inline constexpr int kMaxOrbitSites = 6;

/// Sweeps the whole group; n <= 6. Canonical representative is the
/// member with the smallest inequality id.
OrbitSummary orbit(const SignTable &f);

/// Sorted, de-duplicated orbit members as id words (bit r set iff f(r) = -1).
std::vector<std::uint64_t> orbit_words(const SignTable &f);

bool in_same_orbit(const SignTable &f, const SignTable &g);

struct OrbitRecord {
    int n = 0;
    InequalityId canonical_id;
    std::uint64_t size = 0;
    bool permutation_invariant = false;
    bool factorizing = false;
    std::optional<double> max_violation;
};

inline constexpr int kMaxCensusSites = 4;

/// Partitions all 2^(2^n) sign tables into orbits, sorted by canonical id.
/// n <= 4. max_violation is left empty.
std::vector<OrbitRecord> classify_all(int n);

/// f(pi(r)) = f(r) for every site permutation pi.
bool is_permutation_invariant(const SignTable &f);

/// Some orbit member is permutation invariant.
bool is_permutation_invariant_orbit(const SignTable &f);
bool is_permutation_invariant_orbit(const OrbitRecord &rec);

/// The Bell polynomial is a product of polynomials on two disjoint,
/// non-empty groups of sites (equivalently f(r_A, r_B) = g(r_A) h(r_B)).
/// This property is constant on orbits.
bool is_factorizing(const SignTable &f);

nlohmann::json to_json(const OrbitRecord &rec);

} // namespace bellcorr
