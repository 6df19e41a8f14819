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


#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"

using namespace designcraft;

namespace {

std::set<std::uint64_t> as_set(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

// Weight counts of a multi-word code by summing every subset of rows.
std::vector<BigInt> subset_sum_counts(const LinearCode& code) {
    std::vector<BigInt> counts(code.length() + 1, 0);
    const std::size_t k = code.dimension();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Word> acc(code.words_per_row(), 0);
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u)
                for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= code.row(i)[w];
        std::size_t wt = 0;
        for (auto x : acc) wt += oracle::weight(x);
        counts[wt] += 1;
    }
    return counts;
}

LinearCode random_wide_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    while (true) {
        std::vector<std::vector<Word>> rows;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Word> r(words_for(n), 0);
            for (std::size_t j = 0; j < n; ++j)
                if (rng() & 1u) flip_bit(r, j);
            rows.push_back(r);
        }
        try {
            return LinearCode(n, rows);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST(LinearCode, FromStringsAndAccessors) {
    const auto c = LinearCode::from_strings({"1100", "0011"});
    EXPECT_EQ(c.length(), 4u);
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_TRUE(c.bit(0, 1));
    EXPECT_FALSE(c.bit(0, 2));
    EXPECT_EQ(c.row_string(1), "0011");
}

TEST(LinearCode, RejectsInvalidGenerators) {
    EXPECT_THROW(LinearCode::from_strings({"110", "110"}), Error);
    EXPECT_THROW(LinearCode::from_strings({"110", "11"}), Error);
    EXPECT_THROW(LinearCode::from_strings({"1a0"}), Error);
    EXPECT_THROW(LinearCode(3, {{0b1000}}), Error);
    EXPECT_THROW(LinearCode(3, {}), Error);
    EXPECT_THROW(LinearCode(0, {{}}), Error);
}

TEST(LinearCode, DualMatchesBruteForceNullSpace) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng() % 11;
        const std::size_t k = 1 + rng() % (n - 1);
        const auto c = oracle::random_code(rng, n, k);
        const auto d = dual(c);
        EXPECT_EQ(d.dimension(), n - k);
        EXPECT_EQ(as_set(oracle::span(d)), as_set(oracle::dual_space(c)));
        EXPECT_TRUE(same_code(dual(d), c));
    }
    EXPECT_THROW(dual(LinearCode::from_strings({"10", "01"})), Error);
}

TEST(LinearCode, ExtendAddsEvenParity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = oracle::random_code(rng, 12, 5);
        const auto e = extend(c);
        EXPECT_EQ(e.length(), 13u);
        for (auto w : oracle::span(e)) {
            EXPECT_EQ(oracle::weight(w) % 2, 0u);
        }
        for (std::size_t i = 0; i < c.dimension(); ++i) EXPECT_EQ(e.row(i)[0] & 0xfffu, c.row(i)[0]);
    }
}

TEST(LinearCode, DoubleDualGeneratorMatchesTheLongRoute) {
    const auto f = field_new(5);
    const auto c = build_c_m(5, CmVariant::BchB0, f);
    EXPECT_TRUE(same_code(double_dual_generator(c), dual(extend(dual(c)))));
    // the padded rows end in 0, so the all-ones row is always independent of them
    EXPECT_EQ(double_dual_generator(double_dual_generator(c)).dimension(), 17u);
}

TEST(LinearCode, SameCodeIgnoresBasis) {
    const auto a = LinearCode::from_strings({"1100", "0110"});
    const auto b = LinearCode::from_strings({"1010", "0110"});
    const auto c = LinearCode::from_strings({"1000", "0110"});
    EXPECT_TRUE(same_code(a, b));
    EXPECT_FALSE(same_code(a, c));
}

TEST(CodeFile, RoundTrip) {
    const auto f = field_new(5);
    const auto c = build_c_m(5, CmVariant::DualNarrow7, f);
    std::stringstream s;
    write_code(s, c);
    const auto back = read_code(s);
    EXPECT_EQ(back.rows(), c.rows());
}

TEST(CodeFile, StrictParsing) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_code(in);
    };
    EXPECT_NO_THROW(parse("n=3\nk=1\n111\n"));
    EXPECT_THROW(parse(""), Error);
    EXPECT_THROW(parse("n=3\n"), Error);
    EXPECT_THROW(parse("n=x\nk=1\n111\n"), Error);
    EXPECT_THROW(parse("n=3\nk=2\n111\n"), Error);
    EXPECT_THROW(parse("n=3\nk=1\n11\n"), Error);
    EXPECT_THROW(parse("n=3\nk=1\n121\n"), Error);
    EXPECT_THROW(parse("n=3\nk=1\n111\n101\n"), Error);
}

TEST(Enumeration, MatchesSubsetSumsOnRandomCodes) {
    std::mt19937_64 rng(99);
    // lengths straddling one to three 64-bit words
    for (std::size_t n : {10u, 31u, 64u, 65u, 100u, 128u, 129u, 150u, 200u, 300u, 600u}) {
        const std::size_t k = 1 + rng() % 11;
        const auto c = random_wide_code(rng, n, k);
        EXPECT_EQ(weight_distribution(c).counts(), subset_sum_counts(c)) << n;
    }
}

TEST(Enumeration, ThreadCountDoesNotChangeResults) {
    const auto f = field_new(5);
    const auto c = dual(build_c_m(5, CmVariant::BchB0, f));
    const auto ref = weight_distribution(c, {1, 28});
    for (unsigned t : {2u, 3u, 7u, 64u}) EXPECT_EQ(weight_distribution(c, {t, 28}), ref);
    const auto w7 = codewords_of_weight(c, 7, {1, 28});
    for (unsigned t : {2u, 5u}) {
        auto other = codewords_of_weight(c, 7, {t, 28});
        auto sorted_ref = w7;
        std::sort(other.begin(), other.end());
        std::sort(sorted_ref.begin(), sorted_ref.end());
        EXPECT_EQ(other, sorted_ref);
    }
}

TEST(Enumeration, FixedWeightCodewordsMatchOracle) {
    const auto f = field_new(5);
    const auto c = build_c_m(5, CmVariant::BchB0, f);
    for (unsigned w : {8u, 12u, 24u}) {
        auto ours = codewords_of_weight(c, w);
        std::set<std::uint64_t> got;
        for (const auto& s : ours) {
            std::uint64_t mask = 0;
            for (auto i : s.indices) mask |= std::uint64_t{1} << i;
            got.insert(mask);
            EXPECT_EQ(s.size(), w);
        }
        EXPECT_EQ(got, as_set(oracle::words_of_weight(c, w)));
        EXPECT_EQ(got.size(), ours.size());
    }
    EXPECT_TRUE(codewords_of_weight(c, 9).empty());
    EXPECT_EQ(minimum_distance(c), 8u);
}

TEST(Enumeration, BudgetIsEnforced) {
    std::mt19937_64 rng(1);
    const auto c = oracle::random_code(rng, 30, 12);
    try {
        weight_distribution(c, {1, 10});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
        EXPECT_NE(std::string(e.what()).find("enumeration too large"), std::string::npos);
    }
    EXPECT_NO_THROW(weight_distribution(c, {1, 12}));
    EXPECT_THROW(codewords_of_weight(c, 3, {1, 11}), Error);
}

TEST(Enumeration, EveryCodewordIsVisitedOnce) {
    std::mt19937_64 rng(8);
    const auto c = oracle::random_code(rng, 20, 9);
    std::multiset<std::uint64_t> seen;
    walk_codewords(c, 0, std::uint64_t{1} << 9, [&](std::span<const Word> w, std::size_t wt) {
        seen.insert(w[0]);
        EXPECT_EQ(wt, oracle::weight(w[0]));
    });
    EXPECT_EQ(seen.size(), 512u);
    EXPECT_EQ(as_set(oracle::span(c)), std::set<std::uint64_t>(seen.begin(), seen.end()));
}
