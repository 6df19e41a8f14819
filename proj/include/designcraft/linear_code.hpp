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

#ifndef DESIGNCRAFT_LINEAR_CODE_HPP
#define DESIGNCRAFT_LINEAR_CODE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace designcraft {

using Word = std::uint64_t;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(std::span<const Word> v, std::size_t j) { return (v[j / 64] >> (j % 64)) & 1u; }
inline void flip_bit(std::span<Word> v, std::size_t j) { v[j / 64] ^= Word{1} << (j % 64); }

inline std::size_t popcount(std::span<const Word> v) {
    std::size_t c = 0;
    for (Word w : v) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

/// Sorted coordinate positions where a codeword is nonzero.
struct SupportSet {
    std::vector<std::uint32_t> indices;

    std::size_t size() const { return indices.size(); }

    static SupportSet of(std::span<const Word> word, std::size_t n) {
        SupportSet s;
        for (std::size_t w = 0; w < word.size(); ++w)
            for (Word bits = word[w]; bits != 0; bits &= bits - 1) {
                const std::size_t j = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
                if (j < n) s.indices.push_back(static_cast<std::uint32_t>(j));
            }
        return s;
    }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
    friend auto operator<=>(const SupportSet&, const SupportSet&) = default;
};

namespace detail {

/// Dense GF(2) matrix, row-major, rows padded to whole words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }

    std::span<Word> row(std::size_t i) { return {data_.data() + i * words_, words_}; }
    std::span<const Word> row(std::size_t i) const { return {data_.data() + i * words_, words_}; }

    bool get(std::size_t i, std::size_t j) const { return test_bit(row(i), j); }

    void xor_row(std::size_t dst, std::size_t src) {
        Word* d = data_.data() + dst * words_;
        const Word* s = data_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
    }

    /// Reduced row-echelon form in place. Returns the pivot column of each of
    /// the first rank() rows; remaining rows become zero.
    std::vector<std::size_t> reduce() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && !get(p, c)) ++p;
            if (p == rows_) continue;
            swap_rows(r, p);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && get(i, c)) xor_row(i, r);
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    const std::vector<Word>& data() const { return data_; }

private:
    std::size_t rows_, cols_, words_;
    std::vector<Word> data_;
};

}  // namespace detail

/// Binary linear [n, k] code given by k independent generator rows of n bits.
/// Coordinate j of a row lives in bit j % 64 of word j / 64.
class LinearCode {
public:
    LinearCode(std::size_t n, const std::vector<std::vector<Word>>& rows) : n_(n), k_(rows.size()), words_(words_for(n)) {
        if (n == 0) throw Error(ErrorKind::InvalidArgument, "code length must be positive");
        if (k_ == 0) throw Error(ErrorKind::InvalidArgument, "code dimension must be positive");
        if (k_ > n_) throw Error(ErrorKind::InvalidArgument, "more generator rows than coordinates");
        data_.assign(k_ * words_, 0);
        for (std::size_t i = 0; i < k_; ++i) {
            if (rows[i].size() != words_) throw Error(ErrorKind::InvalidArgument, "generator row has the wrong word count");
            for (std::size_t w = 0; w < words_; ++w) data_[i * words_ + w] = rows[i][w];
            if (n_ % 64 != 0 && (data_[i * words_ + words_ - 1] >> (n_ % 64)) != 0)
                throw Error(ErrorKind::InvalidArgument, "generator row has bits beyond the code length");
        }
        if (rank() != k_) throw Error(ErrorKind::InvalidArgument, "generator rows are linearly dependent");
    }

    /// Rows as strings over {0,1}, coordinate 0 leftmost.
    static LinearCode from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "code dimension must be positive");
        const std::size_t n = rows.front().size();
        std::vector<std::vector<Word>> packed;
        for (const auto& r : rows) {
            if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "generator rows have different lengths");
            std::vector<Word> v(words_for(n), 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (r[j] == '1')
                    flip_bit(v, j);
                else if (r[j] != '0')
                    throw Error(ErrorKind::Parse, "generator row contains a character other than 0/1");
            }
            packed.push_back(std::move(v));
        }
        return LinearCode(n, packed);
    }

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    std::size_t words_per_row() const { return words_; }

    std::span<const Word> row(std::size_t i) const { return {data_.data() + i * words_, words_}; }
    bool bit(std::size_t i, std::size_t j) const { return test_bit(row(i), j); }

    std::vector<std::vector<Word>> rows() const {
        std::vector<std::vector<Word>> out;
        for (std::size_t i = 0; i < k_; ++i) out.emplace_back(row(i).begin(), row(i).end());
        return out;
    }

    std::string row_string(std::size_t i) const {
        std::string s(n_, '0');
        for (std::size_t j = 0; j < n_; ++j)
            if (bit(i, j)) s[j] = '1';
        return s;
    }

    detail::BitMatrix matrix() const {
        detail::BitMatrix m(k_, n_);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t w = 0; w < words_; ++w) m.row(i)[w] = data_[i * words_ + w];
        return m;
    }

    std::size_t rank() const {
        auto m = matrix();
        return m.reduce().size();
    }

private:
    std::size_t n_, k_, words_;
    std::vector<Word> data_;
};

/// True when both generator matrices span the same subspace (compares the
/// unique reduced row-echelon forms).
inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
    auto ma = a.matrix();
    auto mb = b.matrix();
    ma.reduce();
    mb.reduce();
    return ma.data() == mb.data();
}

/// Generator matrix of the null space of the code's rows.
inline LinearCode dual(const LinearCode& code) {
    const std::size_t n = code.length();
    if (code.dimension() == n) throw Error(ErrorKind::InvalidArgument, "zero dual: the code is the full space");
    auto m = code.matrix();
    const auto pivots = m.reduce();
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Word>> rows;
    rows.reserve(n - pivots.size());
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Word> v(words_for(n), 0);
        flip_bit(v, f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.get(r, f)) flip_bit(v, pivots[r]);
        rows.push_back(std::move(v));
    }
    return LinearCode(n, rows);
}

/// Appends an overall parity coordinate at index n.
inline LinearCode extend(const LinearCode& code) {
    const std::size_t n = code.length();
    std::vector<std::vector<Word>> rows;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        std::vector<Word> v(words_for(n + 1), 0);
        const auto r = code.row(i);
        std::copy(r.begin(), r.end(), v.begin());
        if (popcount(r) % 2 == 1) flip_bit(v, n);
        rows.push_back(std::move(v));
    }
    return LinearCode(n + 1, rows);
}

/// Dual of the extended dual, built directly from C's generator matrix as
///   [ 1...1 | 1 ]
///   [   G   | 0 ].
inline LinearCode double_dual_generator(const LinearCode& code) {
    const std::size_t n = code.length();
    std::vector<std::vector<Word>> rows;
    std::vector<Word> ones(words_for(n + 1), 0);
    for (std::size_t j = 0; j <= n; ++j) flip_bit(ones, j);
    rows.push_back(std::move(ones));
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        std::vector<Word> v(words_for(n + 1), 0);
        const auto r = code.row(i);
        std::copy(r.begin(), r.end(), v.begin());
        rows.push_back(std::move(v));
    }
    try {
        return LinearCode(n + 1, rows);
    } catch (const Error& e) {
        throw Error(ErrorKind::Construction, std::string("rank defect: ") + e.what());
    }
}

/// Code file: "n=<int>", "k=<int>", then k rows of n characters from {0,1}.
inline void write_code(std::ostream& out, const LinearCode& code) {
    out << "n=" << code.length() << '\n' << "k=" << code.dimension() << '\n';
    for (std::size_t i = 0; i < code.dimension(); ++i) out << code.row_string(i) << '\n';
}

namespace detail {

inline std::size_t parse_header_int(const std::string& line, const std::string& key) {
    const std::string prefix = key + "=";
    if (line.rfind(prefix, 0) != 0 || line.size() == prefix.size())
        throw Error(ErrorKind::Parse, "expected '" + prefix + "<int>', got '" + line + "'");
    std::size_t v = 0;
    for (std::size_t i = prefix.size(); i < line.size(); ++i) {
        const char c = line[i];
        if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "expected '" + prefix + "<int>', got '" + line + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace detail

inline LinearCode read_code(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::Parse, "code file is empty");
    const std::size_t n = detail::parse_header_int(line, "n");
    if (!std::getline(in, line)) throw Error(ErrorKind::Parse, "code file is missing the k= line");
    const std::size_t k = detail::parse_header_int(line, "k");
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw Error(ErrorKind::Parse, "code file has fewer than k rows");
        if (line.size() != n)
            throw Error(ErrorKind::Parse, "row " + std::to_string(i) + " has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
        rows.push_back(line);
    }
    while (std::getline(in, line))
        if (!line.empty()) throw Error(ErrorKind::Parse, "code file has more than k rows");
    return LinearCode::from_strings(rows);
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_LINEAR_CODE_HPP
