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

#include "bellcorr/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bellcorr {

namespace {

void check_sites(int n, int max_n, const char *who) {
    if (n < 1 || n > max_n) {
        throw RangeError(std::string(who) + ": site count " + std::to_string(n) +
                         " outside [1, " + std::to_string(max_n) + "]");
    }
}

void check_element(const GroupElement &g) {
    const int n = g.n();
    check_sites(n, kMaxSites, "GroupElement");
    std::vector<bool> hit(n, false);
    for (int p : g.perm) {
        if (p < 0 || p >= n || hit[p]) {
            throw RangeError("GroupElement: perm is not a permutation");
        }
        hit[p] = true;
    }
    const std::uint32_t mask = n >= 32 ? ~0U : ((1U << n) - 1U);
    if ((g.r0 & ~mask) != 0 || (g.s0 & ~mask) != 0) {
        throw RangeError("GroupElement: r0/s0 wider than n bits");
    }
    if (g.global != 1 && g.global != -1) {
        throw RangeError("GroupElement: global sign must be +-1");
    }
}

std::uint64_t low_mask(int n) {
    const std::size_t size = table_size(n);
    return size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
}

// Packed-word view of the group action for n <= 6. For every site
// permutation it stores pi(r) and, for every s0, the word of parities
// <s0, pi(r)>; the full orbit is then gathers plus xors.
class WordAction {
  public:
    explicit WordAction(int n) : n_(n), size_(table_size(n)), full_(low_mask(n)) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> image(size_);
            for (std::size_t r = 0; r < size_; ++r) {
                image[r] = static_cast<std::uint8_t>(permute_bits(perm, static_cast<std::uint32_t>(r)));
            }
            std::vector<std::uint64_t> phases(size_, 0);
            for (std::size_t s0 = 0; s0 < size_; ++s0) {
                for (std::size_t r = 0; r < size_; ++r) {
                    if (parity_inner(s0, image[r])) {
                        phases[s0] |= std::uint64_t{1} << r;
                    }
                }
            }
            images_.push_back(std::move(image));
            phases_.push_back(std::move(phases));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    template <class Visit> void for_each_image(std::uint64_t word, Visit &&visit) const {
        for (std::size_t p = 0; p < images_.size(); ++p) {
            const auto &image = images_[p];
            const auto &phases = phases_[p];
            for (std::size_t r0 = 0; r0 < size_; ++r0) {
                std::uint64_t gathered = 0;
                for (std::size_t r = 0; r < size_; ++r) {
                    gathered |= ((word >> (image[r] ^ r0)) & 1U) << r;
                }
                for (std::size_t s0 = 0; s0 < size_; ++s0) {
                    const std::uint64_t w = gathered ^ phases[s0];
                    visit(w);
                    visit(w ^ full_);
                }
            }
        }
    }

    bool permutation_invariant(std::uint64_t word) const {
        for (const auto &image : images_) {
            for (std::size_t r = 0; r < size_; ++r) {
                if (((word >> r) & 1U) != ((word >> image[r]) & 1U)) {
                    return false;
                }
            }
        }
        return true;
    }

  private:
    int n_;
    std::size_t size_;
    std::uint64_t full_;
    std::vector<std::vector<std::uint8_t>> images_;
    std::vector<std::vector<std::uint64_t>> phases_;
};

} // namespace

GroupElement GroupElement::identity(int n) {
    check_sites(n, kMaxSites, "GroupElement::identity");
    GroupElement g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

std::uint32_t permute_bits(const std::vector<int> &perm, std::uint32_t bits) {
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out |= ((bits >> perm[k]) & 1U) << k;
    }
    return out;
}

GroupElement compose(const GroupElement &g, const GroupElement &h) {
    check_element(g);
    check_element(h);
    if (g.n() != h.n()) {
        throw DimensionError("compose: group elements act on different site counts");
    }
    GroupElement out;
    out.perm.resize(g.n());
    for (int k = 0; k < g.n(); ++k) {
        out.perm[k] = g.perm[h.perm[k]];
    }
    out.r0 = permute_bits(h.perm, g.r0) ^ h.r0;
    out.s0 = permute_bits(h.perm, g.s0) ^ h.s0;
    out.global = g.global * h.global * character(h.s0, permute_bits(h.perm, g.r0));
    return out;
}

GroupElement inverse(const GroupElement &g) {
    check_element(g);
    GroupElement out;
    out.perm.resize(g.n());
    for (int k = 0; k < g.n(); ++k) {
        out.perm[g.perm[k]] = k;
    }
    out.r0 = permute_bits(out.perm, g.r0);
    out.s0 = permute_bits(out.perm, g.s0);
    out.global = g.global * character(out.s0, out.r0);
    return out;
}

GroupElement random_group_element(int n, std::mt19937_64 &rng) {
    GroupElement g = GroupElement::identity(n);
    std::shuffle(g.perm.begin(), g.perm.end(), rng);
    std::uniform_int_distribution<std::uint32_t> bits(0, static_cast<std::uint32_t>(table_size(n) - 1));
    g.r0 = bits(rng);
    g.s0 = bits(rng);
    g.global = std::uniform_int_distribution<int>(0, 1)(rng) ? -1 : 1;
    return g;
}

SignTable apply(const GroupElement &g, const SignTable &f) {
    check_element(g);
    if (g.n() != f.n()) {
        throw DimensionError("apply: group element on " + std::to_string(g.n()) +
                             " sites, sign table on " + std::to_string(f.n()));
    }
    std::vector<std::int8_t> out(f.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        const std::uint32_t pr = permute_bits(g.perm, static_cast<std::uint32_t>(r));
        out[r] = static_cast<std::int8_t>(g.global * character(g.s0, pr) * f[pr ^ g.r0]);
    }
    return SignTable(f.n(), std::move(out));
}

InequalityId group_order(int n) {
    check_sites(n, kMaxSites, "group_order");
    InequalityId order = 1;
    for (int k = 2; k <= n; ++k) {
        order *= k;
    }
    return order << (2 * n + 1);
}

std::vector<std::uint64_t> orbit_words(const SignTable &f) {
    check_sites(f.n(), kMaxOrbitSites, "orbit");
    const WordAction action(f.n());
    std::vector<std::uint64_t> members;
    action.for_each_image(f.word(), [&](std::uint64_t w) { members.push_back(w); });
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

OrbitSummary orbit(const SignTable &f) {
    const auto members = orbit_words(f);
    OrbitSummary out;
    out.size = members.size();
    out.canonical_id = members.front();
    out.canonical = SignTable::from_word(f.n(), members.front());
    return out;
}

bool in_same_orbit(const SignTable &f, const SignTable &g) {
    if (f.n() != g.n()) {
        return false;
    }
    check_sites(f.n(), kMaxOrbitSites, "in_same_orbit");
    const WordAction action(f.n());
    const std::uint64_t target = g.word();
    bool found = false;
    action.for_each_image(f.word(), [&](std::uint64_t w) { found = found || w == target; });
    return found;
}

bool is_permutation_invariant(const SignTable &f) {
    std::vector<int> perm(f.n());
    std::iota(perm.begin(), perm.end(), 0);
    // Adjacent transpositions generate the symmetric group.
    for (int k = 0; k + 1 < f.n(); ++k) {
        std::swap(perm[k], perm[k + 1]);
        for (std::size_t r = 0; r < f.size(); ++r) {
            if (f[permute_bits(perm, static_cast<std::uint32_t>(r))] != f[r]) {
                return false;
            }
        }
        std::swap(perm[k], perm[k + 1]);
    }
    return true;
}

bool is_permutation_invariant_orbit(const SignTable &f) {
    check_sites(f.n(), kMaxOrbitSites, "is_permutation_invariant_orbit");
    // Invariant tables depend only on |r|; check those 2^(n+1) against the orbit.
    const auto members = orbit_words(f);
    const int n = f.n();
    for (std::uint32_t pattern = 0; pattern < (1U << (n + 1)); ++pattern) {
        std::uint64_t w = 0;
        for (std::size_t r = 0; r < f.size(); ++r) {
            if ((pattern >> std::popcount(r)) & 1U) {
                w |= std::uint64_t{1} << r;
            }
        }
        if (std::binary_search(members.begin(), members.end(), w)) {
            return true;
        }
    }
    return false;
}

bool is_permutation_invariant_orbit(const OrbitRecord &rec) {
    return is_permutation_invariant_orbit(id_to_signs(rec.n, rec.canonical_id));
}

bool is_factorizing(const SignTable &f) {
    const int n = f.n();
    if (n < 2) {
        return false;
    }
    const std::size_t all = table_size(n) - 1;
    // Subsets containing site 1 enumerate every bipartition once.
    for (std::size_t a = 1; a < all; a += 2) {
        bool splits = true;
        for (std::size_t r = 0; r < f.size() && splits; ++r) {
            splits = f[r] * f[0] == f[r & a] * f[r & ~a & all];
        }
        if (splits) {
            return true;
        }
    }
    return false;
}

std::vector<OrbitRecord> classify_all(int n) {
    check_sites(n, kMaxCensusSites, "classify_all");
    const WordAction action(n);
    const std::size_t count = std::size_t{1} << table_size(n);
    std::vector<bool> seen(count, false);
    std::vector<OrbitRecord> records;
    for (std::size_t id = 0; id < count; ++id) {
        if (seen[id]) {
            continue;
        }
        OrbitRecord rec;
        rec.n = n;
        rec.canonical_id = id;
        action.for_each_image(id, [&](std::uint64_t w) {
            if (!seen[w]) {
                seen[w] = true;
                ++rec.size;
                if (!rec.permutation_invariant && action.permutation_invariant(w)) {
                    rec.permutation_invariant = true;
                }
            }
        });
        rec.factorizing = is_factorizing(SignTable::from_word(n, id));
        records.push_back(std::move(rec));
    }
    return records;
}

nlohmann::json to_json(const OrbitRecord &rec) {
    nlohmann::json j = {{"n", rec.n},
                        {"canonical_id", id_to_json(rec.canonical_id)},
                        {"size", rec.size},
                        {"permutation_invariant", rec.permutation_invariant},
                        {"factorizing", rec.factorizing}};
    if (rec.max_violation) {
        j["max_violation"] = *rec.max_violation;
    } else {
        j["max_violation"] = nullptr;
    }
    return j;
}

} // namespace bellcorr
