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

#include "bellcorr/inequality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace bellcorr {

namespace {

void check_sites(int n, const char *who) {
    if (n < 1 || n > kMaxSites) {
        throw RangeError(std::string(who) + ": site count " + std::to_string(n) +
                         " outside [1, 31]");
    }
}

// Maps a lexicographic position t (s_1 most significant) to the index s.
std::size_t lexicographic_to_index(std::size_t t, int n) {
    std::size_t s = 0;
    for (int k = 0; k < n; ++k) {
        if ((t >> (n - 1 - k)) & 1U) {
            s |= std::size_t{1} << k;
        }
    }
    return s;
}

std::string format_magnitude(std::int64_t numerator, int log_denominator) {
    std::uint64_t p = static_cast<std::uint64_t>(numerator < 0 ? -numerator : numerator);
    int d = log_denominator;
    while (d > 0 && (p & 1U) == 0) {
        p >>= 1;
        --d;
    }
    if (d == 0) {
        return std::to_string(p);
    }
    return std::to_string(p) + "/" + std::to_string(std::uint64_t{1} << d);
}

std::string monomial(std::size_t s, int n) {
    std::string out;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            out += ' ';
        }
        const int choice = static_cast<int>((s >> k) & 1U);
        if (n <= 26) {
            out += static_cast<char>('a' + k);
            out += std::to_string(choice + 1);
        } else {
            out += "A" + std::to_string(k + 1) + "(" + std::to_string(choice) + ")";
        }
    }
    return out;
}

} // namespace

SignTable::SignTable(int n, std::vector<std::int8_t> signs) : n_(n), signs_(std::move(signs)) {
    check_sites(n, "SignTable");
    if (signs_.size() != table_size(n)) {
        throw DimensionError("SignTable: expected " + std::to_string(table_size(n)) +
                             " entries, got " + std::to_string(signs_.size()));
    }
    for (std::int8_t x : signs_) {
        if (x != 1 && x != -1) {
            throw RangeError("SignTable: entry " + std::to_string(int{x}) + " is not +-1");
        }
    }
}

SignTable SignTable::constant(int n, int sign) {
    check_sites(n, "SignTable");
    return SignTable(n, std::vector<std::int8_t>(table_size(n), static_cast<std::int8_t>(sign)));
}

SignTable SignTable::from_word(int n, std::uint64_t word) {
    if (n < 1 || n > 6) {
        throw RangeError("SignTable::from_word needs 1 <= n <= 6");
    }
    if (n < 6 && (word >> table_size(n)) != 0) {
        throw RangeError("SignTable::from_word: word has bits beyond 2^n");
    }
    std::vector<std::int8_t> signs(table_size(n));
    for (std::size_t r = 0; r < signs.size(); ++r) {
        signs[r] = ((word >> r) & 1U) ? -1 : 1;
    }
    return SignTable(n, std::move(signs));
}

SignTable SignTable::parse(std::string_view text) {
    std::vector<std::int8_t> signs;
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
            throw ParseError(std::string("sign string: unexpected character '") + c + "'");
        }
    }
    if (signs.empty()) {
        throw ParseError("sign string is empty");
    }
    const int n = log2_exact(signs.size());
    return SignTable(n, std::move(signs));
}

std::uint64_t SignTable::word() const {
    if (n_ > 6) {
        throw RangeError("SignTable::word needs n <= 6");
    }
    std::uint64_t w = 0;
    for (std::size_t r = 0; r < signs_.size(); ++r) {
        if (signs_[r] < 0) {
            w |= std::uint64_t{1} << r;
        }
    }
    return w;
}

std::string SignTable::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (std::int8_t x : signs_) {
        out += x > 0 ? '+' : '-';
    }
    return out;
}

SignTable SignTable::operator-() const {
    SignTable out = *this;
    for (std::int8_t &x : out.signs_) {
        x = static_cast<std::int8_t>(-x);
    }
    return out;
}

BellTable::BellTable(DyadicVector coefficients) : coefficients_(std::move(coefficients)) {
    check_sites(coefficients_.n(), "BellTable");
}

BellTable::BellTable(int n, std::vector<std::int64_t> numerators, int log_denominator)
    : BellTable(DyadicVector(n, std::move(numerators), log_denominator)) {}

bool BellTable::is_extremal() const {
    const auto w = walsh_hadamard(std::span<const std::int64_t>(coefficients_.numerators()));
    const std::int64_t unit = std::int64_t{1} << coefficients_.log_denominator();
    for (std::int64_t x : w) {
        if (x != unit && x != -unit) {
            return false;
        }
    }
    return true;
}

BellTable coefficients_from_signs(const SignTable &f) {
    std::vector<std::int64_t> v(f.signs().begin(), f.signs().end());
    walsh_hadamard_inplace(std::span<std::int64_t>(v));
    return BellTable(f.n(), std::move(v), f.n());
}

SignTable signs_from_coefficients(const BellTable &beta) {
    const auto w = walsh_hadamard(std::span<const std::int64_t>(beta.coefficients().numerators()));
    const std::int64_t unit = std::int64_t{1} << beta.coefficients().log_denominator();
    std::vector<std::int8_t> signs(w.size());
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (w[r] == unit) {
            signs[r] = 1;
        } else if (w[r] == -unit) {
            signs[r] = -1;
        } else {
            throw NotExtremalError("coefficient table is not extremal: transformed value at r=" +
                                   std::to_string(r) + " is not +-1");
        }
    }
    return SignTable(beta.n(), std::move(signs));
}

InequalityId inequality_count(int n) {
    check_sites(n, "inequality_count");
    InequalityId one = 1;
    return one << table_size(n);
}

SignTable id_to_signs(int n, const InequalityId &id) {
    check_sites(n, "id_to_signs");
    if (id < 0 || id >= inequality_count(n)) {
        throw RangeError("inequality id out of range for n=" + std::to_string(n));
    }
    std::vector<std::int8_t> signs(table_size(n));
    for (std::size_t r = 0; r < signs.size(); ++r) {
        signs[r] = boost::multiprecision::bit_test(id, static_cast<unsigned>(r)) ? -1 : 1;
    }
    return SignTable(n, std::move(signs));
}

InequalityId signs_to_id(const SignTable &f) {
    InequalityId id = 0;
    for (std::size_t r = 0; r < f.size(); ++r) {
        if (f[r] < 0) {
            boost::multiprecision::bit_set(id, static_cast<unsigned>(r));
        }
    }
    return id;
}

double evaluate(const BellTable &beta, std::span<const double> xi) {
    if (xi.size() != beta.size()) {
        throw DimensionError("evaluate: table has " + std::to_string(beta.size()) +
                             " entries, correlation vector " + std::to_string(xi.size()));
    }
    double sum = 0.0;
    for (std::size_t s = 0; s < xi.size(); ++s) {
        const std::int64_t c = beta.coefficients().numerator(s);
        if (c != 0) {
            sum += static_cast<double>(c) * xi[s];
        }
    }
    return std::ldexp(sum, -beta.coefficients().log_denominator());
}

std::string polynomial_string(const BellTable &beta) {
    const int n = beta.n();
    const auto &c = beta.coefficients();
    std::ostringstream out;
    bool first = true;
    for (std::size_t t = 0; t < beta.size(); ++t) {
        const std::size_t s = lexicographic_to_index(t, n);
        const std::int64_t num = c.numerator(s);
        if (num == 0) {
            continue;
        }
        if (first) {
            if (num < 0) {
                out << '-';
            }
        } else {
            out << (num < 0 ? " - " : " + ");
        }
        const std::string mag = format_magnitude(num, c.log_denominator());
        if (mag != "1") {
            out << mag << ' ';
        }
        out << monomial(s, n);
        first = false;
    }
    if (first) {
        return "0";
    }
    return out.str();
}

namespace {

class PolynomialParser {
  public:
    PolynomialParser(std::string_view text, int n) : text_(text), n_(n) {}

    BellTable parse() {
        skip_space();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            parse_term(sign);
            first = false;
        }
        return build();
    }

  private:
    void parse_term(int sign) {
        skip_space();
        std::uint64_t p = 1;
        std::uint64_t q = 1;
        bool has_number = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            p = parse_uint();
            has_number = true;
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                q = parse_uint();
            }
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
            }
        }
        if (q == 0 || (q & (q - 1)) != 0) {
            fail("denominator must be a power of two");
        }
        std::size_t s = 0;
        std::uint64_t seen = 0;
        int factors = 0;
        while (true) {
            skip_space();
            if (at_end() || peek() == '+' || peek() == '-') {
                break;
            }
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            auto [site, choice] = parse_variable();
            if (site < 1 || site > n_) {
                fail("variable refers to site " + std::to_string(site) + " outside 1.." +
                     std::to_string(n_));
            }
            if ((seen >> (site - 1)) & 1U) {
                fail("site " + std::to_string(site) + " appears twice in one term");
            }
            seen |= std::uint64_t{1} << (site - 1);
            if (choice) {
                s |= std::size_t{1} << (site - 1);
            }
            ++factors;
        }
        if (factors == 0) {
            if (has_number && p == 0) {
                return;
            }
            fail("term without variables");
        }
        if (factors != n_) {
            fail("every term needs one variable per site");
        }
        terms_.push_back({s, sign * static_cast<std::int64_t>(p), std::countr_zero(q)});
    }

    std::pair<int, int> parse_variable() {
        const char c = peek();
        if (c == 'A') {
            ++pos_;
            const int site = static_cast<int>(parse_uint());
            expect('(');
            const int choice = static_cast<int>(parse_uint());
            expect(')');
            if (choice > 1) {
                fail("observable choice must be 0 or 1");
            }
            return {site, choice};
        }
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            const int label = static_cast<int>(parse_uint());
            if (label != 1 && label != 2) {
                fail("observable label must be 1 or 2");
            }
            return {c - 'a' + 1, label - 1};
        }
        fail(std::string("unexpected character '") + c + "'");
        return {};
    }

    BellTable build() {
        int d = 0;
        for (const auto &t : terms_) {
            d = std::max(d, t.log_denominator);
        }
        std::vector<std::int64_t> numerators(table_size(n_), 0);
        for (const auto &t : terms_) {
            numerators[t.index] += t.numerator << (d - t.log_denominator);
        }
        return BellTable(n_, std::move(numerators), d);
    }

    std::uint64_t parse_uint() {
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a number");
        }
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (std::uint64_t{1} << 40)) {
                fail("number too large");
            }
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("polynomial, position " + std::to_string(pos_) + ": " + what);
    }

    struct Term {
        std::size_t index;
        std::int64_t numerator;
        int log_denominator;
    };

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
    std::vector<Term> terms_;
};

} // namespace

BellTable parse_polynomial(std::string_view text, int n) {
    check_sites(n, "parse_polynomial");
    if (n > 20) {
        throw RangeError("parse_polynomial: n too large");
    }
    return PolynomialParser(text, n).parse();
}

SignTable mermin_signs(int n) {
    check_sites(n, "mermin_signs");
    std::vector<std::int8_t> signs(table_size(n));
    for (std::size_t r = 0; r < signs.size(); ++r) {
        const int w = std::popcount(r) % 4;
        signs[r] = (w == 0 || w == 3) ? -1 : 1;
    }
    return SignTable(n, std::move(signs));
}

nlohmann::json id_to_json(const InequalityId &id) {
    if (id >= 0 && id <= std::numeric_limits<std::uint64_t>::max()) {
        return id.convert_to<std::uint64_t>();
    }
    return id.str();
}

InequalityId parse_id(std::string_view text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("inequality id must be a non-negative decimal integer");
    }
    return InequalityId(std::string(text));
}

InequalityId id_from_json(const nlohmann::json &j) {
    if (j.is_number_unsigned()) {
        return InequalityId(j.get<std::uint64_t>());
    }
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return InequalityId(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_id(j.get<std::string>());
    }
    throw ParseError("inequality id must be a non-negative integer or decimal string");
}

nlohmann::json to_json(const BellTable &beta) {
    return {{"n", beta.n()},
            {"log_denominator", beta.coefficients().log_denominator()},
            {"numerators", beta.coefficients().numerators()}};
}

BellTable bell_table_from_json(const nlohmann::json &j) {
    try {
        return BellTable(j.at("n").get<int>(), j.at("numerators").get<std::vector<std::int64_t>>(),
                         j.at("log_denominator").get<int>());
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("BellTable JSON: ") + e.what());
    }
}

} // namespace bellcorr
