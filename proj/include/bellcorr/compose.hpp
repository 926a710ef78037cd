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

#include <memory>
#include <span>
#include <utility>

#include <nlohmann/json.hpp>

#include "bellcorr/inequality.hpp"

namespace bellcorr {

/// Largest site count substitute() will flatten to.
inline constexpr int kMaxComposedSites = 20;

/// Replaces every variable A_k(c) of `outer` (K sites) by the polynomial
/// slots[2k + c]. Both slots of outer site k must have the same site count
/// n_k; outer site k becomes the block of n_k consecutive sites in the
/// result. All inputs must be extremal; so is the result.
BellTable substitute(const BellTable &outer, std::span<const BellTable> slots);

/// 1/2 (a1 b1 + a1 b2 + a2 b1 - a2 b2)
BellTable chsh_prototype();

/// The single-site table A(choice).
BellTable single_site(int choice, int sign = 1);

struct ChshSplit {
    BellTable b0;
    BellTable b1;
};

/// Splits off the last site: B = 1/2 B0 (A_n(0) + A_n(1)) + 1/2 B1 (A_n(0) - A_n(1)).
ChshSplit chsh_decompose(const BellTable &beta);

/// substitute(chsh_prototype(), {b0, b1, A(0), A(1)}), the inverse of chsh_decompose.
BellTable chsh_reconstruct(const ChshSplit &split);

/// Binary tree of nested CHSH substitutions. A leaf is +-A_1(choice); an
/// inner node on m sites combines two (m-1)-site subtrees with the CHSH
/// shell on site m.
class NestingTree {
  public:
    static NestingTree leaf(int choice, int sign);
    static NestingTree chsh(NestingTree a0, NestingTree a1);

    bool is_leaf() const { return !a0_; }
    /// Number of sites covered; also the site split off at this node.
    int sites() const { return sites_; }
    int choice() const { return choice_; }
    int sign() const { return sign_; }
    const NestingTree &a0() const { return *a0_; }
    const NestingTree &a1() const { return *a1_; }
    int depth() const;

    /// Multiplies the tree out into a flat coefficient table.
    BellTable expand() const;

    nlohmann::json to_json() const;
    static NestingTree from_json(const nlohmann::json &j);

  private:
    int sites_ = 1;
    int choice_ = 0;
    int sign_ = 1;
    std::shared_ptr<const NestingTree> a0_;
    std::shared_ptr<const NestingTree> a1_;
};

/// Recursive chsh_decompose down to single sites. Throws NotExtremalError
/// if the input (or, impossibly, an intermediate) is not extremal.
NestingTree full_nesting(const BellTable &beta);

} // namespace bellcorr
