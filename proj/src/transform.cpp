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

#include "bellcorr/transform.hpp"

#include <cmath>
#include <string>

namespace bellcorr {

BitString::BitString(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxSites) {
        throw RangeError("BitString: site count " + std::to_string(n) + " outside [1, 31]");
    }
    if (n < 32 && (bits >> n) != 0) {
        throw RangeError("BitString: bits beyond position " + std::to_string(n) + " are set");
    }
}

BitString BitString::operator^(const BitString &other) const {
    if (n_ != other.n_) {
        throw DimensionError("BitString: xor of strings with different lengths");
    }
    return BitString(n_, bits_ ^ other.bits_);
}

int parity_inner(const BitString &r, const BitString &s) {
    if (r.n() != s.n()) {
        throw DimensionError("parity_inner: lengths " + std::to_string(r.n()) + " and " +
                             std::to_string(s.n()) + " differ");
    }
    return parity_inner(std::uint64_t{r.bits()}, std::uint64_t{s.bits()});
}

int log2_exact(std::size_t length) {
    if (length == 0 || !std::has_single_bit(length)) {
        throw DimensionError("length " + std::to_string(length) + " is not a power of two");
    }
    return std::countr_zero(length);
}

std::vector<std::int64_t> walsh_hadamard(std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out(v.begin(), v.end());
    walsh_hadamard_inplace(std::span<std::int64_t>(out));
    return out;
}

std::vector<double> walsh_hadamard(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    walsh_hadamard_inplace(std::span<double>(out));
    return out;
}

DyadicVector::DyadicVector(int n, std::vector<std::int64_t> numerators, int log_denominator)
    : n_(n), numerators_(std::move(numerators)), log_denominator_(log_denominator) {
    if (n < 0 || n > kMaxSites) {
        throw RangeError("DyadicVector: site count " + std::to_string(n) + " out of range");
    }
    if (numerators_.size() != table_size(n)) {
        throw DimensionError("DyadicVector: expected " + std::to_string(table_size(n)) +
                             " numerators, got " + std::to_string(numerators_.size()));
    }
    if (log_denominator < 0) {
        throw RangeError("DyadicVector: negative log denominator");
    }
    reduce();
}

DyadicVector DyadicVector::zero(int n) {
    return DyadicVector(n, std::vector<std::int64_t>(table_size(n), 0), 0);
}

void DyadicVector::reduce() {
    if (is_zero()) {
        log_denominator_ = 0;
        return;
    }
    while (log_denominator_ > 0) {
        for (std::int64_t x : numerators_) {
            if (x & 1) {
                return;
            }
        }
        for (std::int64_t &x : numerators_) {
            x /= 2;
        }
        --log_denominator_;
    }
}

double DyadicVector::value(std::size_t i) const {
    return std::ldexp(static_cast<double>(numerators_.at(i)), -log_denominator_);
}

std::vector<double> DyadicVector::values() const {
    std::vector<double> out(numerators_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = value(i);
    }
    return out;
}

bool DyadicVector::is_zero() const {
    for (std::int64_t x : numerators_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

} // namespace bellcorr
