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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bellcorr/errors.hpp"

namespace bellcorr {

inline constexpr int kMaxSites = 31;

/// Number of entries in a table over n sites.
constexpr std::size_t table_size(int n) { return std::size_t{1} << n; }

/// n-bit string over Z_2. Site k (1-based) lives in bit k-1.
class BitString {
  public:
    BitString() = default;
    BitString(int n, std::uint32_t bits);

    int n() const { return n_; }
    std::uint32_t bits() const { return bits_; }

    /// Entry for site k, 1 <= k <= n.
    int site(int k) const { return static_cast<int>((bits_ >> (k - 1)) & 1U); }
    int weight() const { return std::popcount(bits_); }

    BitString operator^(const BitString &other) const;
    bool operator==(const BitString &) const = default;

  private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

/// <r, s> = sum_k r_k s_k mod 2 on raw words.
constexpr int parity_inner(std::uint64_t r, std::uint64_t s) {
    return std::popcount(r & s) & 1;
}

int parity_inner(const BitString &r, const BitString &s);

/// (-1)^<r,s>
constexpr int character(std::uint64_t r, std::uint64_t s) {
    return parity_inner(r, s) ? -1 : 1;
}

/// log2 of a power-of-two length; throws DimensionError otherwise.
int log2_exact(std::size_t length);

/// Unnormalized in-place butterfly: v[r] <- sum_s (-1)^<r,s> v[s].
template <class T> void walsh_hadamard_inplace(std::span<T> v) {
    log2_exact(v.size());
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t block = 0; block < v.size(); block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const T a = v[i];
                const T b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

std::vector<std::int64_t> walsh_hadamard(std::span<const std::int64_t> v);
std::vector<double> walsh_hadamard(std::span<const double> v);

/// Table of dyadic rationals numerators[i] / 2^log_denominator, kept reduced.
class DyadicVector {
  public:
    DyadicVector() = default;
    DyadicVector(int n, std::vector<std::int64_t> numerators, int log_denominator);

    static DyadicVector zero(int n);

    int n() const { return n_; }
    std::size_t size() const { return numerators_.size(); }
    int log_denominator() const { return log_denominator_; }
    const std::vector<std::int64_t> &numerators() const { return numerators_; }
    std::int64_t numerator(std::size_t i) const { return numerators_[i]; }
    double value(std::size_t i) const;
    std::vector<double> values() const;
    bool is_zero() const;

    bool operator==(const DyadicVector &) const = default;

  private:
    void reduce();

    int n_ = 0;
    std::vector<std::int64_t> numerators_;
    int log_denominator_ = 0;
};

} // namespace bellcorr
