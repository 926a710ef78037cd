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

#include "bellcorr/compose.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace bellcorr {

namespace {

void require_extremal(const BellTable &beta, const char *who) {
    if (!beta.is_extremal()) {
        throw NotExtremalError(std::string(who) + ": input table is not extremal");
    }
}

// Numerators of `v` rescaled to denominator 2^d (d >= v.log_denominator()).
std::vector<std::int64_t> rescaled(const DyadicVector &v, int d) {
    std::vector<std::int64_t> out = v.numerators();
    for (std::int64_t &x : out) {
        x <<= (d - v.log_denominator());
    }
    return out;
}

} // namespace

BellTable substitute(const BellTable &outer, std::span<const BellTable> slots) {
    const int k_sites = outer.n();
    if (slots.size() != 2 * static_cast<std::size_t>(k_sites)) {
        throw DimensionError("substitute: expected " + std::to_string(2 * k_sites) +
                             " slot tables for a " + std::to_string(k_sites) + "-site outer table");
    }
    require_extremal(outer, "substitute");
    std::vector<int> offset(k_sites + 1, 0);
    std::vector<int> denom(k_sites, 0);
    for (int k = 0; k < k_sites; ++k) {
        const BellTable &lo = slots[2 * k];
        const BellTable &hi = slots[2 * k + 1];
        require_extremal(lo, "substitute");
        require_extremal(hi, "substitute");
        if (lo.n() != hi.n()) {
            throw DimensionError("substitute: both slots of outer site " + std::to_string(k + 1) +
                                 " need the same site count");
        }
        offset[k + 1] = offset[k] + lo.n();
        denom[k] = std::max(lo.coefficients().log_denominator(),
                            hi.coefficients().log_denominator());
    }
    const int n = offset[k_sites];
    if (n > kMaxComposedSites) {
        throw RangeError("substitute: result would have " + std::to_string(n) + " sites (max " +
                         std::to_string(kMaxComposedSites) + ")");
    }
    std::vector<std::array<std::vector<std::int64_t>, 2>> inner(k_sites);
    int total_denom = outer.coefficients().log_denominator();
    for (int k = 0; k < k_sites; ++k) {
        inner[k][0] = rescaled(slots[2 * k].coefficients(), denom[k]);
        inner[k][1] = rescaled(slots[2 * k + 1].coefficients(), denom[k]);
        total_denom += denom[k];
    }

    std::vector<std::int64_t> result(table_size(n), 0);
    std::vector<std::int64_t> partial;
    for (std::size_t so = 0; so < outer.size(); ++so) {
        const std::int64_t c = outer.coefficients().numerator(so);
        if (c == 0) {
            continue;
        }
        // Tensor product of the chosen slot tables, built block by block.
        partial.assign(1, c);
        for (int k = 0; k < k_sites; ++k) {
            const auto &block = inner[k][(so >> k) & 1U];
            std::vector<std::int64_t> next(partial.size() * block.size(), 0);
            for (std::size_t t = 0; t < block.size(); ++t) {
                if (block[t] == 0) {
                    continue;
                }
                for (std::size_t p = 0; p < partial.size(); ++p) {
                    next[p + (t << offset[k])] = partial[p] * block[t];
                }
            }
            partial = std::move(next);
        }
        for (std::size_t s = 0; s < result.size(); ++s) {
            result[s] += partial[s];
        }
    }
    return BellTable(n, std::move(result), total_denom);
}

BellTable chsh_prototype() { return BellTable(2, {1, 1, 1, -1}, 1); }

BellTable single_site(int choice, int sign) {
    if ((choice != 0 && choice != 1) || (sign != 1 && sign != -1)) {
        throw RangeError("single_site: choice must be 0/1 and sign +-1");
    }
    std::vector<std::int64_t> v(2, 0);
    v[choice] = sign;
    return BellTable(1, std::move(v), 0);
}

ChshSplit chsh_decompose(const BellTable &beta) {
    const int n = beta.n();
    if (n < 2) {
        throw RangeError("chsh_decompose needs at least two sites");
    }
    require_extremal(beta, "chsh_decompose");
    const std::size_t half = table_size(n - 1);
    const auto &num = beta.coefficients().numerators();
    std::vector<std::int64_t> sum(half);
    std::vector<std::int64_t> diff(half);
    for (std::size_t t = 0; t < half; ++t) {
        sum[t] = num[t] + num[t + half];
        diff[t] = num[t] - num[t + half];
    }
    const int d = beta.coefficients().log_denominator();
    ChshSplit split{BellTable(n - 1, std::move(sum), d), BellTable(n - 1, std::move(diff), d)};
    require_extremal(split.b0, "chsh_decompose (B0)");
    require_extremal(split.b1, "chsh_decompose (B1)");
    return split;
}

BellTable chsh_reconstruct(const ChshSplit &split) {
    const std::array<BellTable, 4> slots = {split.b0, split.b1, single_site(0), single_site(1)};
    return substitute(chsh_prototype(), slots);
}

NestingTree NestingTree::leaf(int choice, int sign) {
    if ((choice != 0 && choice != 1) || (sign != 1 && sign != -1)) {
        throw RangeError("NestingTree::leaf: choice must be 0/1 and sign +-1");
    }
    NestingTree t;
    t.choice_ = choice;
    t.sign_ = sign;
    return t;
}

NestingTree NestingTree::chsh(NestingTree a0, NestingTree a1) {
    if (a0.sites() != a1.sites()) {
        throw DimensionError("NestingTree::chsh: subtrees cover different site counts");
    }
    NestingTree t;
    t.sites_ = a0.sites() + 1;
    t.a0_ = std::make_shared<const NestingTree>(std::move(a0));
    t.a1_ = std::make_shared<const NestingTree>(std::move(a1));
    return t;
}

int NestingTree::depth() const {
    if (is_leaf()) {
        return 0;
    }
    return 1 + std::max(a0_->depth(), a1_->depth());
}

BellTable NestingTree::expand() const {
    if (is_leaf()) {
        return single_site(choice_, sign_);
    }
    const BellTable b0 = a0_->expand();
    const BellTable b1 = a1_->expand();
    const int d = std::max(b0.coefficients().log_denominator(), b1.coefficients().log_denominator());
    const auto x = rescaled(b0.coefficients(), d);
    const auto y = rescaled(b1.coefficients(), d);
    const std::size_t half = x.size();
    std::vector<std::int64_t> out(2 * half);
    for (std::size_t t = 0; t < half; ++t) {
        out[t] = x[t] + y[t];
        out[t + half] = x[t] - y[t];
    }
    return BellTable(sites_, std::move(out), d + 1);
}

nlohmann::json NestingTree::to_json() const {
    if (is_leaf()) {
        return {{"site", 1}, {"choice", choice_}, {"sign", sign_}};
    }
    return {{"op", "chsh"}, {"site", sites_}, {"a0", a0_->to_json()}, {"a1", a1_->to_json()}};
}

NestingTree NestingTree::from_json(const nlohmann::json &j) {
    try {
        if (j.contains("op")) {
            if (j.at("op") != "chsh") {
                throw ParseError("nesting tree: unknown op");
            }
            NestingTree t = chsh(from_json(j.at("a0")), from_json(j.at("a1")));
            if (j.contains("site") && j.at("site").get<int>() != t.sites()) {
                throw ParseError("nesting tree: site label does not match subtree size");
            }
            return t;
        }
        if (j.contains("site") && j.at("site").get<int>() != 1) {
            throw ParseError("nesting tree: leaves live on site 1");
        }
        return leaf(j.at("choice").get<int>(), j.at("sign").get<int>());
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("nesting tree JSON: ") + e.what());
    }
}

NestingTree full_nesting(const BellTable &beta) {
    require_extremal(beta, "full_nesting");
    if (beta.n() == 1) {
        const std::int64_t c0 = beta.coefficients().numerator(0);
        const std::int64_t c1 = beta.coefficients().numerator(1);
        return c0 != 0 ? NestingTree::leaf(0, c0 > 0 ? 1 : -1)
                       : NestingTree::leaf(1, c1 > 0 ? 1 : -1);
    }
    const ChshSplit split = chsh_decompose(beta);
    return NestingTree::chsh(full_nesting(split.b0), full_nesting(split.b1));
}

} // namespace bellcorr
