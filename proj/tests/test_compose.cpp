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

#include <array>
#include <random>
#include <vector>

#include "bellcorr/compose.hpp"
#include "bellcorr/errors.hpp"

using namespace bellcorr;

namespace {

BellTable from_id(int n, std::uint64_t id) { return coefficients_from_signs(id_to_signs(n, id)); }

} // namespace

TEST_SUITE("compose") {

TEST_CASE("CHSH times a single site") {
    const std::array<BellTable, 4> slots = {single_site(0), single_site(1),
                                            parse_polynomial("a1 b1", 2),
                                            parse_polynomial("a2 b1", 2)};
    const BellTable out = substitute(chsh_prototype(), slots);
    CHECK(out.n() == 3);
    CHECK(polynomial_string(out) == "1/2 a1 b1 c1 + 1/2 a1 b2 c1 + 1/2 a2 b1 c1 - 1/2 a2 b2 c1");
    CHECK(out.is_extremal());
}

TEST_CASE("trivial outer table returns the slot") {
    const BellTable beta = from_id(3, 23);
    const std::array<BellTable, 2> slots = {beta, from_id(3, 100)};
    CHECK(substitute(single_site(0), slots) == beta);
    const std::array<BellTable, 2> swapped = {from_id(3, 100), beta};
    CHECK(substitute(single_site(1, -1), swapped) ==
          coefficients_from_signs(-id_to_signs(3, 23)));
}

TEST_CASE("substitute validates its inputs") {
    const std::array<BellTable, 3> short_slots = {single_site(0), single_site(1), single_site(0)};
    CHECK_THROWS_AS(substitute(chsh_prototype(), short_slots), DimensionError);
    const std::array<BellTable, 4> uneven = {single_site(0), chsh_prototype(), single_site(0),
                                             single_site(1)};
    CHECK_THROWS_AS(substitute(chsh_prototype(), uneven), DimensionError);
    const std::array<BellTable, 2> flat = {BellTable(2, {1, 1, 1, 1}, 2), chsh_prototype()};
    CHECK_THROWS_AS(substitute(single_site(0), flat), NotExtremalError);
    CHECK_THROWS_AS(single_site(2), RangeError);
}

TEST_CASE("substituting extremal tables stays extremal") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BellTable> slots;
        for (int k = 0; k < 2; ++k) {
            const int m = 1 + static_cast<int>(rng() % 3);
            const auto count = std::uint64_t{1} << table_size(m);
            slots.push_back(from_id(m, rng() % count));
            slots.push_back(from_id(m, rng() % count));
        }
        const BellTable outer = from_id(2, rng() % 16);
        const BellTable out = substitute(outer, slots);
        CHECK(out.n() == slots[0].n() + slots[2].n());
        CHECK(out.is_extremal());
    }
}

TEST_CASE("Mermin n=3 splits into CHSH and its relabeling") {
    const BellTable mermin(3, {0, 1, 1, 0, 1, 0, 0, -1}, 1);
    REQUIRE(mermin.is_extremal());
    const ChshSplit split = chsh_decompose(mermin);
    CHECK(split.b0 == chsh_prototype());
    CHECK(split.b1 == BellTable(2, {-1, 1, 1, 1}, 1));
    CHECK(chsh_reconstruct(split) == mermin);
}

TEST_CASE("product inequality splits into equal halves") {
    const ChshSplit split = chsh_decompose(from_id(3, 0));
    CHECK(split.b0 == from_id(2, 0));
    CHECK(split.b1 == from_id(2, 0));
}

TEST_CASE("decompose validates its input") {
    CHECK_THROWS_AS(chsh_decompose(single_site(0)), RangeError);
    CHECK_THROWS_AS(chsh_decompose(BellTable(2, {1, 1, 1, 1}, 2)), NotExtremalError);
}

TEST_CASE("decompose and reconstruct are inverse on all n=3 tables") {
    for (std::uint64_t id = 0; id < 256; ++id) {
        const BellTable beta = from_id(3, id);
        const ChshSplit split = chsh_decompose(beta);
        REQUIRE(split.b0.is_extremal());
        REQUIRE(split.b1.is_extremal());
        REQUIRE(chsh_reconstruct(split) == beta);
    }
}

TEST_CASE("nesting trees") {
    const NestingTree chsh = full_nesting(chsh_prototype());
    CHECK(chsh.depth() == 1);
    CHECK(chsh.sites() == 2);
    CHECK(chsh.expand() == chsh_prototype());

    const BellTable mermin(3, {0, 1, 1, 0, 1, 0, 0, -1}, 1);
    const NestingTree tree = full_nesting(mermin);
    CHECK(tree.depth() == 2);
    CHECK(tree.a0().expand() == chsh_prototype());
    CHECK(tree.a1().expand() == BellTable(2, {-1, 1, 1, 1}, 1));
    CHECK(tree.expand() == mermin);
    CHECK(NestingTree::from_json(tree.to_json()).expand() == mermin);
}

TEST_CASE("nesting round trip on random n=6 tables") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        const BellTable beta = from_id(6, rng());
        const NestingTree tree = full_nesting(beta);
        CHECK(tree.depth() == 5);
        CHECK(tree.expand() == beta);
    }
}

TEST_CASE("nesting tree JSON is validated") {
    CHECK_THROWS_AS(NestingTree::from_json(nlohmann::json{{"op", "xor"}}), ParseError);
    CHECK_THROWS_AS(NestingTree::from_json(nlohmann::json{{"choice", 0}}), ParseError);
    const nlohmann::json bad_site = {{"op", "chsh"},
                                     {"site", 3},
                                     {"a0", {{"site", 1}, {"choice", 0}, {"sign", 1}}},
                                     {"a1", {{"site", 1}, {"choice", 1}, {"sign", 1}}}};
    CHECK_THROWS_AS(NestingTree::from_json(bad_site), ParseError);
    CHECK_THROWS_AS(NestingTree::chsh(full_nesting(chsh_prototype()), NestingTree::leaf(0, 1)),
                    DimensionError);
}

} // TEST_SUITE
