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

#include "oracles.hpp"

using namespace designcraft;

namespace {

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Bch, FiveWeightConstructionsHaveTheRightParameters) {
    const auto f5 = field_new(5);
    for (auto v : {CmVariant::BchB0, CmVariant::DualNarrow7}) {
        const auto c = build_c_m(5, v, f5);
        EXPECT_EQ(c.length(), 31u);
        EXPECT_EQ(c.dimension(), 15u);
    }
    const auto f7 = field_new(7);
    EXPECT_EQ(build_c_m(7, CmVariant::BchB0, f7).dimension(), 21u);
    EXPECT_EQ(build_c_m(7, CmVariant::DualNarrow7, f7).dimension(), 21u);
    const auto f9 = field_new(9);
    EXPECT_EQ(build_c_m(9, CmVariant::BchB0, f9).dimension(), 27u);
}

TEST(Bch, DesignedDistanceOfTheB0Window) {
    EXPECT_EQ(c_m_designed_distance(5), 7u);
    EXPECT_EQ(c_m_designed_distance(7), 47u);
}

TEST(Bch, PreconditionMessages) {
    const auto f4 = field_new(4);
    EXPECT_EQ(message_of([&] { build_c_m(4, CmVariant::BchB0, f4); }), "m must be odd");
    const auto f3 = field_new(3);
    EXPECT_EQ(message_of([&] { build_c_m(3, CmVariant::BchB0, f3); }), "m must be at least 5");
    const auto f5 = field_new(5);
    EXPECT_NE(message_of([&] { bch_code(BchSpec::primitive(5, 1, 1), f5); }).find("designed distance too small"), std::string::npos);
    EXPECT_THROW(bch_code(BchSpec::primitive(5, 40, 1), f5), Error);
}

TEST(Bch, GeneratorVanishesOnTheWindow) {
    const auto f = field_new(5);
    const std::uint64_t mod = f.modulus().mask();
    for (auto [delta, offset] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 1}, {5, 1}, {7, 1}, {7, 0}, {4, 9}}) {
        const auto g = bch_generator(BchSpec::primitive(5, delta, offset), f);
        ASSERT_LE(g.degree(), 63);
        for (std::uint64_t j = offset; j < offset + delta - 1; ++j)
            EXPECT_EQ(oracle::gf_eval(g.mask(), oracle::gf_pow(2, j % 31, mod, 5), mod, 5), 0u) << delta << ' ' << offset << ' ' << j;
        EXPECT_TRUE(g.divides(BinaryPolynomial::x_pow_n_plus_one(31)));
    }
}

TEST(Bch, HammingCodeIsTheNarrowSenseDistanceThreeCode) {
    const auto f = field_new(3);
    const auto c = bch_code(BchSpec::primitive(3, 3, 1), f);
    EXPECT_EQ(c.dimension(), 4u);
    const auto counts = oracle::weight_counts(c);
    EXPECT_EQ(counts[3], 7);
    EXPECT_EQ(counts[4], 7);
    EXPECT_EQ(counts[7], 1);
}

TEST(Bch, BchBoundHolds) {
    const auto f = field_new(5);
    for (std::uint64_t delta : {3u, 5u, 7u, 11u}) {
        const auto c = bch_code(BchSpec::primitive(5, delta, 1), f);
        const auto counts = oracle::weight_counts(c);
        std::size_t d = 1;
        while (counts[d] == 0) ++d;
        EXPECT_GE(d, delta);
    }
}

TEST(Bch, CyclicShiftsStayInTheCode) {
    const auto f = field_new(5);
    for (auto v : {CmVariant::BchB0, CmVariant::DualNarrow7}) {
        const auto c = build_c_m(5, v, f);
        const auto words = oracle::span(c);
        std::vector<std::uint64_t> sorted(words);
        std::sort(sorted.begin(), sorted.end());
        const std::uint64_t full = (std::uint64_t{1} << 31) - 1;
        for (std::size_t i = 0; i < c.dimension(); ++i) {
            const std::uint64_t r = c.row(i)[0];
            const std::uint64_t shifted = ((r << 1) | (r >> 30)) & full;
            EXPECT_TRUE(std::binary_search(sorted.begin(), sorted.end(), shifted));
        }
    }
}

TEST(Bch, ReciprocalDualAgreesWithNullSpace) {
    const auto f = field_new(5);
    const auto narrow = bch_code(BchSpec::primitive(5, 7, 1), f);
    const auto via_reciprocal = build_c_m(5, CmVariant::DualNarrow7, f);
    EXPECT_TRUE(same_code(dual(narrow), via_reciprocal));
    const auto f7 = field_new(7);
    EXPECT_TRUE(same_code(dual(bch_code(BchSpec::primitive(7, 7, 1), f7)), build_c_m(7, CmVariant::DualNarrow7, f7)));
}

TEST(Bch, CyclicCodeRejectsNonDivisors) {
    EXPECT_THROW(cyclic_code(BinaryPolynomial::parse("x^2+x+1"), 7), Error);
    EXPECT_EQ(cyclic_code(BinaryPolynomial::parse("x^3+x+1"), 7).dimension(), 4u);
}
