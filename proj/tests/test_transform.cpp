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

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bellcorr/errors.hpp"
#include "bellcorr/transform.hpp"

using namespace bellcorr;

namespace {

// Direct O(4^n) sum, independent of the butterfly.
std::vector<std::int64_t> naive_transform(const std::vector<std::int64_t> &v) {
    std::vector<std::int64_t> out(v.size(), 0);
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            out[r] += (__builtin_popcountll(r & s) % 2 ? -1 : 1) * v[s];
        }
    }
    return out;
}

std::vector<std::int64_t> random_table(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    std::vector<std::int64_t> v(table_size(n));
    for (auto &x : v) {
        x = d(rng);
    }
    return v;
}

} // namespace

TEST_SUITE("transform") {

TEST_CASE("parity_inner examples") {
    CHECK(parity_inner(BitString(3, 0b000), BitString(3, 0b101)) == 0);
    CHECK(parity_inner(BitString(3, 0b101), BitString(3, 0b101)) == 0);
    CHECK(parity_inner(BitString(3, 0b011), BitString(3, 0b001)) == 1);
    CHECK(character(0b011, 0b001) == -1);
    CHECK(character(0b111, 0b011) == 1);
}

TEST_CASE("parity_inner rejects mismatched lengths") {
    CHECK_THROWS_AS(parity_inner(BitString(2, 1), BitString(3, 1)), DimensionError);
}

TEST_CASE("BitString sites and validation") {
    const BitString r(4, 0b0110);
    CHECK(r.site(1) == 0);
    CHECK(r.site(2) == 1);
    CHECK(r.site(3) == 1);
    CHECK(r.site(4) == 0);
    CHECK(r.weight() == 2);
    CHECK((r ^ BitString(4, 0b0011)) == BitString(4, 0b0101));
    CHECK_THROWS_AS(BitString(2, 0b100), RangeError);
    CHECK_THROWS_AS(BitString(32, 0), RangeError);
}

TEST_CASE("walsh_hadamard examples") {
    const std::vector<std::int64_t> delta = {1, 0, 0, 0};
    CHECK(walsh_hadamard(delta) == std::vector<std::int64_t>{1, 1, 1, 1});
    const std::vector<std::int64_t> chsh = {1, 1, 1, -1};
    CHECK(walsh_hadamard(chsh) == std::vector<std::int64_t>{2, 2, 2, -2});
}

TEST_CASE("walsh_hadamard rejects non power-of-two lengths") {
    const std::vector<std::int64_t> v = {1, 2, 3};
    CHECK_THROWS_AS(walsh_hadamard(v), DimensionError);
    const std::vector<std::int64_t> empty;
    CHECK_THROWS_AS(walsh_hadamard(empty), DimensionError);
}

TEST_CASE("walsh_hadamard agrees with the direct sum") {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 7; ++n) {
        const auto v = random_table(n, rng);
        CHECK(walsh_hadamard(v) == naive_transform(v));
    }
}

TEST_CASE("walsh_hadamard is an involution up to 2^n") {
    std::mt19937_64 rng(12);
    for (int n = 0; n <= 10; ++n) {
        const auto v = random_table(n, rng);
        const auto w = walsh_hadamard(walsh_hadamard(v));
        for (std::size_t i = 0; i < v.size(); ++i) {
            REQUIRE(w[i] == (v[i] << n));
        }
    }
}

TEST_CASE("walsh_hadamard satisfies Parseval") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 9; ++n) {
        const auto v = random_table(n, rng);
        const auto w = walsh_hadamard(v);
        std::int64_t lhs = 0;
        std::int64_t rhs = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            lhs += w[i] * w[i];
            rhs += v[i] * v[i];
        }
        CHECK(lhs == (rhs << n));
    }
}

TEST_CASE("floating-point transform matches the integer one") {
    std::mt19937_64 rng(14);
    const auto v = random_table(6, rng);
    const std::vector<double> vd(v.begin(), v.end());
    const auto wi = walsh_hadamard(v);
    const auto wd = walsh_hadamard(vd);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(wd[i] == static_cast<double>(wi[i]));
    }
}

TEST_CASE("DyadicVector stays reduced") {
    const DyadicVector v(2, {2, 2, 2, -2}, 2);
    CHECK(v.log_denominator() == 1);
    CHECK(v.numerators() == std::vector<std::int64_t>{1, 1, 1, -1});
    CHECK(v.value(3) == -0.5);
    CHECK(v == DyadicVector(2, {4, 4, 4, -4}, 3));

    const DyadicVector z(2, {0, 0, 0, 0}, 5);
    CHECK(z.is_zero());
    CHECK(z.log_denominator() == 0);
    CHECK(z == DyadicVector::zero(2));

    CHECK_THROWS_AS(DyadicVector(2, {1, 2, 3}, 0), DimensionError);
    CHECK_THROWS_AS(DyadicVector(1, {1, 1}, -1), RangeError);
}

} // TEST_SUITE
