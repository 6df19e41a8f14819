/*
   Copyright 2026 The designcraft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DESIGNCRAFT_BINARY_POLYNOMIAL_HPP
#define DESIGNCRAFT_BINARY_POLYNOMIAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace designcraft {

/// Polynomial over GF(2), coefficient of x^j stored in bit j of a packed word
/// array. The word array never carries zero words above the leading term.
class BinaryPolynomial {
public:
    static constexpr long long kZeroDegree = -1;

    BinaryPolynomial() = default;

    static BinaryPolynomial from_mask(std::uint64_t mask) {
        BinaryPolynomial p;
        if (mask != 0) p.words_.push_back(mask);
        return p;
    }

    static BinaryPolynomial monomial(std::uint64_t degree) {
        BinaryPolynomial p;
        p.set_coefficient(degree, true);
        return p;
    }

    /// x^n + 1
    static BinaryPolynomial x_pow_n_plus_one(std::uint64_t n) {
        BinaryPolynomial p = monomial(n);
        p.words_[0] ^= 1;
        p.trim();
        return p;
    }

    /// Parses "x^5+x^2+1" style text. Terms may appear in any order; repeated
    /// terms cancel.
    static BinaryPolynomial parse(const std::string& text) {
        BinaryPolynomial p;
        std::string s;
        for (char c : text)
            if (c != ' ') s.push_back(c);
        if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
        if (s == "0") return p;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t end = s.find('+', pos);
            if (end == std::string::npos) end = s.size();
            const std::string term = s.substr(pos, end - pos);
            std::uint64_t degree = 0;
            if (term == "1") {
                degree = 0;
            } else if (term == "x") {
                degree = 1;
            } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^' &&
                       std::all_of(term.begin() + 2, term.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                degree = std::stoull(term.substr(2));
            } else {
                throw Error(ErrorKind::Parse, "bad polynomial term '" + term + "'");
            }
            p.set_coefficient(degree, !p.coefficient(degree));
            pos = end + 1;
            if (end == s.size()) break;
        }
        return p;
    }

    long long degree() const {
        if (words_.empty()) return kZeroDegree;
        return static_cast<long long>(64 * (words_.size() - 1) + (63 - std::countl_zero(words_.back())));
    }

    bool is_zero() const { return words_.empty(); }

    bool coefficient(std::uint64_t j) const {
        const std::size_t w = j / 64;
        return w < words_.size() && ((words_[w] >> (j % 64)) & 1u);
    }

    void set_coefficient(std::uint64_t j, bool value) {
        const std::size_t w = j / 64;
        if (w >= words_.size()) {
            if (!value) return;
            words_.resize(w + 1, 0);
        }
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        words_[w] = value ? (words_[w] | bit) : (words_[w] & ~bit);
        trim();
    }

    /// Low 64 coefficients; only meaningful when degree() < 64.
    std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }

    /// x^deg * p(1/x)
    BinaryPolynomial reciprocal() const {
        BinaryPolynomial r;
        const long long d = degree();
        for (long long j = 0; j <= d; ++j)
            if (coefficient(static_cast<std::uint64_t>(j))) r.set_coefficient(static_cast<std::uint64_t>(d - j), true);
        return r;
    }

    BinaryPolynomial& operator+=(const BinaryPolynomial& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        trim();
        return *this;
    }

    friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }

    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        BinaryPolynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        r.words_.assign(a.words_.size() + b.words_.size(), 0);
        const long long db = b.degree();
        for (long long j = 0; j <= db; ++j) {
            if (!b.coefficient(static_cast<std::uint64_t>(j))) continue;
            r.xor_shifted(a, static_cast<std::uint64_t>(j));
        }
        r.trim();
        return r;
    }

    /// Quotient and remainder of a / b.
    friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
        BinaryPolynomial q;
        BinaryPolynomial r = a;
        const long long db = b.degree();
        for (long long dr = r.degree(); dr >= db; dr = r.degree()) {
            const auto shift = static_cast<std::uint64_t>(dr - db);
            q.set_coefficient(shift, true);
            r.xor_shifted(b, shift);
            r.trim();
        }
        return {std::move(q), std::move(r)};
    }

    friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).second; }
    friend BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).first; }

    bool divides(const BinaryPolynomial& other) const { return (other % *this).is_zero(); }

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long long j = degree(); j >= 0; --j) {
            if (!coefficient(static_cast<std::uint64_t>(j))) continue;
            if (!s.empty()) s += "+";
            if (j == 0)
                s += "1";
            else if (j == 1)
                s += "x";
            else
                s += "x^" + std::to_string(j);
        }
        return s;
    }

private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    // this ^= other * x^shift; caller trims
    void xor_shifted(const BinaryPolynomial& other, std::uint64_t shift) {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        const std::size_t need = other.words_.size() + ws + 1;
        if (words_.size() < need) words_.resize(need, 0);
        for (std::size_t i = 0; i < other.words_.size(); ++i) {
            words_[i + ws] ^= other.words_[i] << bs;
            if (bs != 0) words_[i + ws + 1] ^= other.words_[i] >> (64 - bs);
        }
    }

    std::vector<std::uint64_t> words_;
};

}  // namespace designcraft

#endif  // DESIGNCRAFT_BINARY_POLYNOMIAL_HPP
