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
#include <sstream>

#include "oracles.hpp"

using namespace designcraft;

namespace {

WeightDistribution wd_of(std::initializer_list<std::pair<std::size_t, long long>> entries, std::size_t n) {
    WeightDistribution wd(n);
    for (auto [w, c] : entries) wd[w] = c;
    return wd;
}

}  // namespace

TEST(Krawtchouk, SignedBinomialProductMatchesConvolution) {
    for (std::size_t a = 0; a <= 24; ++a)
        for (std::size_t b = 0; b <= 24; ++b) ASSERT_EQ(signed_binomial_product(a, b), oracle::signed_binomial_convolution(a, b)) << a << ' ' << b;
    EXPECT_EQ(signed_binomial_product(300, 211), oracle::signed_binomial_convolution(300, 211));
}

TEST(Krawtchouk, NonBinaryColumnMatchesDefinition) {
    // K_j(i) for q = 3 is the coefficient of z^j in (1 - z)^i (1 + 2z)^(n - i)
    const std::size_t n = 9;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<BigInt> expect(n + 1, 0);
        for (std::size_t l = 0; l <= i; ++l)
            for (std::size_t r = 0; r <= n - i; ++r)
                expect[l + r] += (l % 2 ? -1 : 1) * oracle::binom(static_cast<long long>(i), static_cast<long long>(l)) *
                                 oracle::binom(static_cast<long long>(n - i), static_cast<long long>(r)) *
                                 boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(r));
        EXPECT_EQ(krawtchouk_column(n, i, 3), expect) << i;
    }
}

TEST(MacWilliams, SmallExamples) {
    const auto zero = macwilliams(wd_of({{0, 1}}, 6), 0);
    for (std::size_t j = 0; j <= 6; ++j) EXPECT_EQ(zero[j], oracle::binom(6, static_cast<long long>(j)));
    EXPECT_EQ(macwilliams(wd_of({{0, 1}, {3, 1}}, 3), 1), wd_of({{0, 1}, {2, 3}}, 3));
}

TEST(MacWilliams, RejectsImpossibleDistributions) {
    // a total that is not 2^kappa, and three weight-1 words closed under addition
    for (auto [bad, kappa] : {std::pair{wd_of({{0, 1}, {1, 1}, {2, 1}}, 3), 1u}, std::pair{wd_of({{0, 1}, {1, 3}}, 4), 2u}}) {
        try {
            macwilliams(bad, kappa);
            FAIL();
        } catch (const Error& e) {
            EXPECT_NE(std::string(e.what()).find("not a valid code distribution"), std::string::npos);
        }
    }
}

TEST(MacWilliams, MatchesDoubleSumAndDualEnumeration) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 5 + rng() % 12;
        const std::size_t k = 1 + rng() % (n - 1);
        const auto c = oracle::random_code(rng, n, k);
        const auto a = oracle::weight_counts(c);
        const auto b = macwilliams(WeightDistribution(a), static_cast<unsigned>(k));
        EXPECT_EQ(b.counts(), oracle::macwilliams_double_sum(a));
        EXPECT_EQ(b.counts(), oracle::weight_counts(dual(c)));
    }
}

TEST(Table1, FiveWeightDistributionAtSmallM) {
    EXPECT_EQ(table1_distribution(5), wd_of({{0, 1}, {8, 465}, {12, 8680}, {16, 18259}, {20, 5208}, {24, 155}}, 31));
    const auto t7 = table1_distribution(7);
    EXPECT_EQ(t7[48], 26670);
    EXPECT_EQ(t7.support(), (std::vector<std::size_t>{0, 48, 56, 64, 72, 80}));
    for (unsigned m = 5; m <= 15; m += 2) EXPECT_EQ(table1_distribution(m).total(), oracle::pow2(3 * m));
    EXPECT_THROW(table1_distribution(6), Error);
    EXPECT_THROW(table1_distribution(3), Error);
}

TEST(DualClosedForm, AgreesWithTransformAndEnumerationAtFive) {
    const auto cf = dual_closed_form(5);
    EXPECT_EQ(cf, macwilliams(table1_distribution(5), 15));
    const auto f = field_new(5);
    EXPECT_EQ(cf, weight_distribution(dual(build_c_m(5, CmVariant::BchB0, f))));
    EXPECT_EQ(cf[7], 155);
}

TEST(DualClosedForm, LowWeightsAcrossM) {
    const auto d7 = dual_closed_form(7);
    EXPECT_EQ(d7[7], 48387);
    EXPECT_EQ(d7[8], 725805);
    EXPECT_EQ(d7[9], 8249920);
    EXPECT_EQ(dual_closed_form(9)[7], BigInt("13297315"));
    for (unsigned m = 5; m <= 13; m += 2) {
        const auto d = dual_closed_form(m);
        for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(d[k], 0) << m << ' ' << k;
        EXPECT_GT(d[7], 0);
        EXPECT_EQ(d.total(), oracle::pow2((1u << m) - 1 - 3 * m));
    }
}

TEST(DualClosedForm, MatchesTransformAtSeven) { EXPECT_EQ(dual_closed_form(7), macwilliams(table1_distribution(7), 21)); }

TEST(DoubleDual, FrequenciesAndSymmetry) {
    const auto p = double_dual_params(5);
    EXPECT_EQ(p.u, 620);
    EXPECT_EQ(p.freq_v, 13888);
    EXPECT_EQ(p.w, 36518);
    EXPECT_EQ(double_dual_params(7).u, 42672);
    for (unsigned m = 5; m <= 13; m += 2) {
        const auto wd = double_dual_closed_form(m);
        const std::size_t n = std::size_t{1} << m;
        EXPECT_EQ(wd.total(), oracle::pow2(3 * m + 1));
        for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(wd[i], wd[n - i]);
        EXPECT_TRUE(pless_check(wd, m)) << m;
    }
}

TEST(DoubleDual, PowerMomentCheckCatchesPerturbations) {
    auto wd = double_dual_closed_form(5);
    wd[8] += 1;
    wd[12] -= 1;
    EXPECT_FALSE(pless_check(wd, 5));
    EXPECT_FALSE(pless_check(table1_distribution(5), 5));
}

TEST(DoubleDual, MatchesEnumerationAtFive) {
    const auto f = field_new(5);
    const auto c = build_c_m(5, CmVariant::BchB0, f);
    EXPECT_EQ(double_dual_closed_form(5).counts(), oracle::weight_counts(double_dual_generator(c)));
}

TEST(ExtendedDual, ClosedFormValues) {
    const auto e5 = extended_dual_closed_form(5);
    EXPECT_EQ(e5[8], 620);
    EXPECT_EQ(e5[12], 13888);
    const auto e7 = extended_dual_closed_form(7);
    EXPECT_EQ(e7[8], 774192);
    EXPECT_EQ(e7[10], 105598976);
    EXPECT_EQ(e7[12], BigInt("11361676032"));
    EXPECT_EQ(extended_dual_closed_form(9)[8], BigInt("851028160"));
}

TEST(ExtendedDual, EvenWeightsAndTransformAcrossM) {
    for (unsigned m = 5; m <= 13; m += 2) {
        const auto e = extended_dual_closed_form(m);
        for (std::size_t k = 1; k <= e.length(); k += 2) ASSERT_EQ(e[k], 0);
        EXPECT_EQ(e.minimum_weight(), 8u);
        EXPECT_EQ(e, macwilliams(double_dual_closed_form(m), 3 * m + 1)) << m;
    }
}

TEST(ExtendedDual, MatchesEnumerationAtFive) {
    const auto f = field_new(5);
    const auto c = build_c_m(5, CmVariant::DualNarrow7, f);
    EXPECT_EQ(extended_dual_closed_form(5), weight_distribution(extend(dual(c))));
}

TEST(WeightCsv, RoundTripAndErrors) {
    const auto wd = dual_closed_form(7);
    std::stringstream s;
    write_csv(s, wd);
    EXPECT_EQ(read_csv(s, 127), wd);
    auto parse = [](const std::string& text, std::size_t n) {
        std::istringstream in(text);
        return read_csv(in, n);
    };
    EXPECT_EQ(parse("weight,count\n0,1\n3,1\n", 3), wd_of({{0, 1}, {3, 1}}, 3));
    EXPECT_THROW(parse("w,c\n0,1\n", 3), Error);
    EXPECT_THROW(parse("weight,count\n4,1\n", 3), Error);
    EXPECT_THROW(parse("weight,count\n2,1\n1,1\n", 3), Error);
    EXPECT_THROW(parse("weight,count\n1,-1\n", 3), Error);
    EXPECT_THROW(parse("weight,count\n1;1\n", 3), Error);
}
