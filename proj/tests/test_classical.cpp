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

#include <cmath>
#include <random>
#include <vector>

#include "bellcorr/classical.hpp"
#include "bellcorr/errors.hpp"

using namespace bellcorr;

namespace {

const CorrelationVector kGhzMermin(3, {0, 1, 1, 0, 1, 0, 0, -1});

CorrelationVector random_box_vector(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> xi(table_size(n));
    for (double &x : xi) {
        x = d(rng);
    }
    return CorrelationVector(n, std::move(xi));
}

std::vector<double> as_vector(const CorrelationVector &xi) {
    return {xi.values().begin(), xi.values().end()};
}

} // namespace

TEST_SUITE("classical") {

TEST_CASE("extreme point examples") {
    CHECK(as_vector(extreme_point(BitString(2, 0b00), 1)) == std::vector<double>{1, 1, 1, 1});
    CHECK(as_vector(extreme_point(BitString(2, 0b11), 1)) == std::vector<double>{1, -1, -1, 1});
    // r = 01 means r_2 = 1: the sign follows s_2, the high bit of s.
    CHECK(as_vector(extreme_point(BitString(2, 0b10), -1)) == std::vector<double>{-1, -1, 1, 1});
    CHECK_THROWS_AS(extreme_point(BitString(2, 0), 0), RangeError);
}

TEST_CASE("mix examples") {
    const auto point = mix(ClassicalModel(2, {{BitString(2, 0), 1, 1.0}}));
    for (double x : point.values()) {
        CHECK(x == 1.0);
    }
    const auto zero = mix(ClassicalModel(2, {{BitString(2, 0), 1, 0.5}, {BitString(2, 0), -1, 0.5}}));
    for (double x : zero.values()) {
        CHECK(x == 0.0);
    }
    std::vector<ClassicalVertex> uniform;
    for (std::uint32_t r = 0; r < 4; ++r) {
        uniform.push_back({BitString(2, r), 1, 0.25});
    }
    CHECK(as_vector(mix(ClassicalModel(2, uniform))) == std::vector<double>{1, 0, 0, 0});
}

TEST_CASE("classical models are validated") {
    CHECK_THROWS_AS(ClassicalModel(2, {}), RangeError);
    CHECK_THROWS_AS(ClassicalModel(2, {{BitString(2, 0), 1, 0.7}}), RangeError);
    CHECK_THROWS_AS(ClassicalModel(2, {{BitString(2, 0), 1, -0.5}, {BitString(2, 1), 1, 1.5}}),
                    RangeError);
    CHECK_THROWS_AS(ClassicalModel(2, {{BitString(3, 0), 1, 1.0}}), DimensionError);
}

TEST_CASE("correlation vectors are validated") {
    CHECK_THROWS_AS(CorrelationVector(2, {1, 1, 1}), DimensionError);
    CHECK_THROWS_AS(CorrelationVector(1, {1.5, 0}), RangeError);
    CHECK_NOTHROW(CorrelationVector(1, {1.0 + 1e-13, 0}));
}

TEST_CASE("spectrum examples") {
    for (std::uint32_t r0 = 0; r0 < 8; ++r0) {
        const auto hat = spectrum(extreme_point(BitString(3, r0), 1));
        for (std::uint32_t r = 0; r < 8; ++r) {
            CHECK(hat[r] == (r == r0 ? 1.0 : 0.0));
        }
    }
    CHECK(spectrum(kGhzMermin) ==
          std::vector<double>{0.25, 0.25, 0.25, -0.25, 0.25, -0.25, -0.25, -0.25});
}

TEST_CASE("l1 margin examples") {
    CHECK(l1_margin(extreme_point(BitString(3, 5), -1)) == 1.0);
    CHECK(l1_margin(kGhzMermin) == 2.0);
    CHECK(l1_margin(CorrelationVector::zero(3)) == 0.0);
}

TEST_CASE("witness examples") {
    CHECK(witness(kGhzMermin) == SignTable::parse("+++-+---"));
    CHECK(evaluate(coefficients_from_signs(witness(kGhzMermin)), kGhzMermin) == 2.0);
    const auto xi = extreme_point(BitString(3, 6), 1);
    CHECK(witness(xi)[6] == 1);
    CHECK(evaluate(coefficients_from_signs(witness(xi)), xi) == 1.0);
}

TEST_CASE("the witness is the best inequality for the vector") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto xi = random_box_vector(3, rng);
        const double best = evaluate(coefficients_from_signs(witness(xi)), xi);
        CHECK(best == doctest::Approx(l1_margin(xi)).epsilon(1e-13));
        for (std::uint64_t id = 0; id < 256; ++id) {
            REQUIRE(evaluate(coefficients_from_signs(id_to_signs(3, id)), xi) <= best + 1e-13);
        }
    }
}

TEST_CASE("every extremal inequality is tight at 1 over the vertices") {
    for (int n = 2; n <= 3; ++n) {
        const std::size_t count = std::size_t{1} << table_size(n);
        for (std::size_t id = 0; id < count; ++id) {
            const BellTable beta = coefficients_from_signs(id_to_signs(n, id));
            double best = -2.0;
            for (std::uint32_t r = 0; r < table_size(n); ++r) {
                for (int sign : {1, -1}) {
                    const double v = evaluate(beta, extreme_point(BitString(n, r), sign));
                    REQUIRE(std::abs(v) == 1.0);
                    best = std::max(best, v);
                }
            }
            REQUIRE(best == 1.0);
        }
    }
}

TEST_CASE("lp membership examples") {
    CHECK(lp_membership(CorrelationVector(3, std::vector<double>(8, 1.0))));
    CHECK_FALSE(lp_membership(kGhzMermin));
    CHECK(lp_membership(kGhzMermin.scaled(0.49)));
    CHECK(lp_membership(CorrelationVector::zero(2)));
    CHECK_THROWS_AS(lp_membership(CorrelationVector::zero(5)), RangeError);
}

TEST_CASE("lp membership agrees with the l1 margin") {
    std::mt19937_64 rng(32);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 4;
        const double scale = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const auto xi = random_box_vector(n, rng).scaled(scale);
        const double margin = l1_margin(xi);
        if (std::abs(margin - 1.0) < 1e-9) {
            continue;
        }
        CHECK(lp_membership(xi) == (margin <= 1.0));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("mixtures are classical") {
    std::mt19937_64 rng(33);
    std::exponential_distribution<double> expo(1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 3;
        std::vector<ClassicalVertex> vs;
        double total = 0.0;
        for (int k = 0; k < 5; ++k) {
            const auto r = static_cast<std::uint32_t>(rng() % table_size(n));
            vs.push_back({BitString(n, r), (rng() & 1U) ? 1 : -1, expo(rng)});
            total += vs.back().weight;
        }
        for (auto &v : vs) {
            v.weight /= total;
        }
        const auto xi = mix(ClassicalModel(n, vs));
        CHECK(l1_margin(xi) <= 1.0 + 1e-12);
        CHECK(is_classical(xi));
    }
}

TEST_CASE("correlation vector input formats") {
    const auto j = to_json(kGhzMermin);
    const auto back = correlation_from_json(j);
    CHECK(spectrum(back) == spectrum(kGhzMermin));
    const auto csv = correlation_from_csv("x0,x1,x2,x3\n0.5,0.5,-0.25,1\n");
    CHECK(csv.n() == 2);
    CHECK(csv[2] == -0.25);
    CHECK_THROWS_AS(correlation_from_csv("1,0\n0,1\n"), ParseError);
    CHECK_THROWS_AS(correlation_from_csv("a,b\n"), ParseError);
    CHECK_THROWS_AS(correlation_from_csv("1,0,0\n"), DimensionError);
    CHECK_THROWS_AS(correlation_from_json(nlohmann::json{{"xi", {1, 0}}}), ParseError);
}

} // TEST_SUITE
