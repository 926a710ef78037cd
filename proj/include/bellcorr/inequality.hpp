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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "bellcorr/transform.hpp"

namespace bellcorr {

/// Inequality numbers run up to 2^(2^n) - 1, so they are unbounded integers.
using InequalityId = boost::multiprecision::cpp_int;

/// f(r) in {-1, +1} for every configuration r; the Fourier dual of an
/// extremal coefficient table.
class SignTable {
  public:
    SignTable() = default;
    /// Throws RangeError unless every entry is exactly +1 or -1.
    SignTable(int n, std::vector<std::int8_t> signs);

    static SignTable constant(int n, int sign = 1);
    /// Bit r of `word` set means f(r) = -1. Requires n <= 6.
    static SignTable from_word(int n, std::uint64_t word);
    /// Parses a string of '+' / '-' characters indexed by r.
    static SignTable parse(std::string_view text);

    int n() const { return n_; }
    std::size_t size() const { return signs_.size(); }
    int operator[](std::size_t r) const { return signs_[r]; }
    const std::vector<std::int8_t> &signs() const { return signs_; }

    /// Inverse of from_word. Requires n <= 6.
    std::uint64_t word() const;
    std::string to_string() const;

    SignTable operator-() const;
    bool operator==(const SignTable &) const = default;

  private:
    int n_ = 0;
    std::vector<std::int8_t> signs_;
};

/// Coefficients beta(s) of a Bell polynomial sum_s beta(s) prod_k A_k(s_k).
/// Arbitrary dyadic tables are representable; extremality is a query.
class BellTable {
  public:
    BellTable() = default;
    explicit BellTable(DyadicVector coefficients);
    BellTable(int n, std::vector<std::int64_t> numerators, int log_denominator);

    int n() const { return coefficients_.n(); }
    std::size_t size() const { return coefficients_.size(); }
    const DyadicVector &coefficients() const { return coefficients_; }
    double coefficient(std::size_t s) const { return coefficients_.value(s); }
    std::vector<double> values() const { return coefficients_.values(); }

    /// The transformed table sum_s beta(s) (-1)^<r,s> is a pure sign table.
    bool is_extremal() const;

    bool operator==(const BellTable &) const = default;

  private:
    DyadicVector coefficients_;
};

/// beta(s) = 2^-n sum_r f(r) (-1)^<r,s>. Always extremal.
BellTable coefficients_from_signs(const SignTable &f);

/// f(r) = sum_s beta(s) (-1)^<r,s>; throws NotExtremalError if some value is not +-1.
SignTable signs_from_coefficients(const BellTable &beta);

/// Bit r of the id (site 1 least significant in r) is 0 for f(r)=+1 and 1 for f(r)=-1.
SignTable id_to_signs(int n, const InequalityId &id);
InequalityId signs_to_id(const SignTable &f);

/// Number of distinct inequalities, 2^(2^n).
InequalityId inequality_count(int n);

/// sum_s beta(s) xi(s)
double evaluate(const BellTable &beta, std::span<const double> xi);

/// Human-readable polynomial, e.g. "1/2 a1 b1 + 1/2 a1 b2 + 1/2 a2 b1 - 1/2 a2 b2".
/// Terms follow lexicographic order of (s_1, ..., s_n).
std::string polynomial_string(const BellTable &beta);

/// Inverse of polynomial_string for n sites. Accepts both the letter form
/// and the A{k}({s_k}) form; repeated monomials are summed.
BellTable parse_polynomial(std::string_view text, int n);

/// Mermin-family inequality: f(r) = -1 iff |r| mod 4 is 0 or 3.
SignTable mermin_signs(int n);

/// JSON number when the id fits 64 bits, decimal string otherwise.
nlohmann::json id_to_json(const InequalityId &id);
/// Accepts a JSON number or a decimal string.
InequalityId id_from_json(const nlohmann::json &j);
InequalityId parse_id(std::string_view text);

nlohmann::json to_json(const BellTable &beta);
BellTable bell_table_from_json(const nlohmann::json &j);

} // namespace bellcorr
