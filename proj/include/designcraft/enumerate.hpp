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

#ifndef DESIGNCRAFT_ENUMERATE_HPP
#define DESIGNCRAFT_ENUMERATE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "linear_code.hpp"
#include "weight_distribution.hpp"

namespace designcraft {

inline constexpr unsigned kDefaultBudgetLog2 = 28;

inline unsigned default_threads() {
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

/// Enumeration cap as a power-of-two exponent; DESIGNCRAFT_BUDGET overrides
/// the default of 28.
inline unsigned budget_from_env() {
    const char* env = std::getenv("DESIGNCRAFT_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultBudgetLog2;
    const std::string s(env);
    if (s.size() > 2 || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "DESIGNCRAFT_BUDGET must be a decimal exponent, got '" + s + "'");
    const unsigned v = static_cast<unsigned>(std::stoul(s));
    if (v > 62) throw Error(ErrorKind::InvalidArgument, "DESIGNCRAFT_BUDGET exponent too large");
    return v;
}

struct EnumerationOptions {
    unsigned threads = default_threads();
    unsigned budget_log2 = budget_from_env();
};

inline bool within_budget(const LinearCode& code, unsigned budget_log2) { return code.dimension() <= budget_log2; }

inline void check_budget(const LinearCode& code, unsigned budget_log2) {
    if (!within_budget(code, budget_log2))
        throw Error(ErrorKind::Budget, "enumeration too large: 2^" + std::to_string(code.dimension()) + " codewords exceeds the budget 2^" +
                                           std::to_string(budget_log2));
}

namespace detail {

// Visits codewords for Gray indices first..last-1. Consecutive Gray indices
// differ in bit ctz(i), so each step costs one row XOR plus a popcount.
template <std::size_t Words, typename Visit>
void gray_walk_fixed(const LinearCode& code, std::uint64_t first, std::uint64_t last, Visit& visit) {
    std::array<Word, Words> cw{};
    const Word* rows = code.row(0).data();
    const std::uint64_t g = first ^ (first >> 1);
    for (std::size_t i = 0; i < code.dimension(); ++i)
        if ((g >> i) & 1u)
            for (std::size_t w = 0; w < Words; ++w) cw[w] ^= rows[i * Words + w];
    auto weight = [&cw] {
        unsigned c = 0;
        for (std::size_t w = 0; w < Words; ++w) c += static_cast<unsigned>(std::popcount(cw[w]));
        return c;
    };
    visit(std::span<const Word>(cw.data(), Words), weight());
    for (std::uint64_t idx = first + 1; idx < last; ++idx) {
        const Word* r = rows + static_cast<std::size_t>(std::countr_zero(idx)) * Words;
        for (std::size_t w = 0; w < Words; ++w) cw[w] ^= r[w];
        visit(std::span<const Word>(cw.data(), Words), weight());
    }
}

template <typename Visit>
void gray_walk_dynamic(const LinearCode& code, std::uint64_t first, std::uint64_t last, Visit& visit) {
    const std::size_t words = code.words_per_row();
    std::vector<Word> cw(words, 0);
    const std::uint64_t g = first ^ (first >> 1);
    for (std::size_t i = 0; i < code.dimension(); ++i)
        if ((g >> i) & 1u)
            for (std::size_t w = 0; w < words; ++w) cw[w] ^= code.row(i)[w];
    visit(std::span<const Word>(cw), static_cast<unsigned>(popcount(cw)));
    for (std::uint64_t idx = first + 1; idx < last; ++idx) {
        const auto r = code.row(static_cast<std::size_t>(std::countr_zero(idx)));
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= r[w];
        visit(std::span<const Word>(cw), static_cast<unsigned>(popcount(cw)));
    }
}

/// Runs fn(worker, first, last) over disjoint contiguous slices of [0, total).
template <typename Fn>
void for_each_slice(std::uint64_t total, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = 1;
    if (total < static_cast<std::uint64_t>(threads) * 1024) threads = 1;
    if (threads == 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t first = total / threads * t;
            const std::uint64_t last = (t + 1 == threads) ? total : total / threads * (t + 1);
            pool.emplace_back([&, t, first, last] {
                try {
                    fn(t, first, last);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Calls visit(word, weight) for the codewords with Gray index in [first, last).
/// Every codeword appears exactly once over [0, 2^k).
template <typename Visit>
void walk_codewords(const LinearCode& code, std::uint64_t first, std::uint64_t last, Visit&& visit) {
    if (first >= last) return;
    switch (code.words_per_row()) {
        case 1: detail::gray_walk_fixed<1>(code, first, last, visit); break;
        case 2: detail::gray_walk_fixed<2>(code, first, last, visit); break;
        case 3: detail::gray_walk_fixed<3>(code, first, last, visit); break;
        case 4: detail::gray_walk_fixed<4>(code, first, last, visit); break;
        case 8: detail::gray_walk_fixed<8>(code, first, last, visit); break;
        default: detail::gray_walk_dynamic(code, first, last, visit); break;
    }
}

inline WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& opts = {}) {
    check_budget(code, opts.budget_log2);
    const std::size_t n = code.length();
    const std::uint64_t total = std::uint64_t{1} << code.dimension();
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
    detail::for_each_slice(total, threads, [&](unsigned t, std::uint64_t first, std::uint64_t last) {
        auto& counts = partial[t];
        walk_codewords(code, first, last, [&counts](std::span<const Word>, unsigned w) { ++counts[w]; });
    });
    WeightDistribution wd(n);
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= n; ++w) wd[w] += p[w];
    return wd;
}

/// Streams every codeword of weight w, in Gray order, to visit(word).
template <typename Visit>
void for_each_codeword_of_weight(const LinearCode& code, std::size_t w, Visit&& visit, unsigned budget_log2 = budget_from_env()) {
    check_budget(code, budget_log2);
    walk_codewords(code, 0, std::uint64_t{1} << code.dimension(), [&](std::span<const Word> word, unsigned weight) {
        if (weight == w) visit(word);
    });
}

/// All codewords of weight w packed back to back (words_per_row() words each).
inline std::vector<Word> collect_codewords_of_weight(const LinearCode& code, std::size_t w, const EnumerationOptions& opts = {}) {
    check_budget(code, opts.budget_log2);
    const std::size_t words = code.words_per_row();
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<std::vector<Word>> partial(threads);
    detail::for_each_slice(std::uint64_t{1} << code.dimension(), threads, [&](unsigned t, std::uint64_t first, std::uint64_t last) {
        auto& out = partial[t];
        walk_codewords(code, first, last, [&](std::span<const Word> word, unsigned weight) {
            if (weight == w) out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(words));
        });
    });
    std::vector<Word> all;
    for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
    return all;
}

inline std::vector<SupportSet> codewords_of_weight(const LinearCode& code, std::size_t w, const EnumerationOptions& opts = {}) {
    const auto packed = collect_codewords_of_weight(code, w, opts);
    const std::size_t words = code.words_per_row();
    std::vector<SupportSet> out;
    for (std::size_t off = 0; off < packed.size(); off += words)
        out.push_back(SupportSet::of(std::span<const Word>(packed.data() + off, words), code.length()));
    return out;
}

inline std::size_t minimum_distance(const LinearCode& code, const EnumerationOptions& opts = {}) {
    const auto wd = weight_distribution(code, opts);
    const auto d = wd.minimum_weight();
    if (!d) throw Error(ErrorKind::InvalidArgument, "code has no nonzero codeword");
    return *d;
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_ENUMERATE_HPP
