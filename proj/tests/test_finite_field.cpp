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

#include "oracles.hpp"

using namespace designcraft;

TEST(BinaryPolynomial, ParseAndPrintRoundTrip) {
    const auto p = BinaryPolynomial::parse("x^5+x^2+1");
    EXPECT_EQ(p.degree(), 5);
    EXPECT_EQ(p.mask(), 0x25u);
    EXPECT_EQ(p.to_string(), "x^5+x^2+1");
    EXPECT_EQ(BinaryPolynomial::parse("x+1").mask(), 3u);
    EXPECT_EQ(BinaryPolynomial().degree(), BinaryPolynomial::kZeroDegree);
    EXPECT_THROW(BinaryPolynomial::parse("x^5+y"), Error);
    EXPECT_THROW(BinaryPolynomial::parse(""), Error);
}

TEST(BinaryPolynomial, DivisionIdentityOnRandomOperands) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryPolynomial a, b;
        for (int j = 0; j < 150; ++j)
            if (rng() & 1u) a.set_coefficient(static_cast<std::uint64_t>(j), true);
        const int db = 1 + static_cast<int>(rng() % 90);
        for (int j = 0; j < db; ++j)
            if (rng() & 1u) b.set_coefficient(static_cast<std::uint64_t>(j), true);
        b.set_coefficient(static_cast<std::uint64_t>(db), true);
        const auto [q, r] = divmod(a, b);
        EXPECT_LT(r.degree(), b.degree());
        EXPECT_EQ(q * b + r, a);
    }
}

TEST(BinaryPolynomial, ProductMatchesSchoolbook) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t a = rng() & 0xffffffffu, b = rng() & 0xffffffffu;
        unsigned __int128 expect = 0;
        for (int i = 0; i < 32; ++i)
            if ((b >> i) & 1u) expect ^= static_cast<unsigned __int128>(a) << i;
        const auto prod = BinaryPolynomial::from_mask(a) * BinaryPolynomial::from_mask(b);
        for (int j = 0; j < 64; ++j) EXPECT_EQ(prod.coefficient(static_cast<std::uint64_t>(j)), static_cast<bool>((expect >> j) & 1u));
    }
}

TEST(BinaryPolynomial, ReciprocalAndXnPlusOne) {
    EXPECT_EQ(BinaryPolynomial::parse("x^3+x+1").reciprocal(), BinaryPolynomial::parse("x^3+x^2+1"));
    const auto f = BinaryPolynomial::x_pow_n_plus_one(7);
    EXPECT_EQ(f.degree(), 7);
    EXPECT_EQ(f.weight(), 2u);
    EXPECT_TRUE(BinaryPolynomial::parse("x^3+x+1").divides(f));
    EXPECT_FALSE(BinaryPolynomial::parse("x^2+x+1").divides(f));
}

TEST(FiniteField, WorkedProduct) {
    const auto f = field_new(5, BinaryPolynomial::parse("x^5+x^2+1"));
    // x^4 * x^4 = x^8 = x^3 + x^2 + 1
    EXPECT_EQ(mul({16}, {16}, f).value, 13u);
    EXPECT_EQ(f.alpha_pow(8).value, 13u);
}

TEST(FiniteField, MultiplicationMatchesOracleExhaustively) {
    for (unsigned m = 3; m <= 7; ++m) {
        const auto f = field_new(m);
        const std::uint64_t mod = f.modulus().mask();
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b) ASSERT_EQ(f.mul({a}, {b}).value, oracle::gf_mul(a, b, mod, m)) << m << ' ' << a << ' ' << b;
    }
}

TEST(FiniteField, MultiplicationMatchesOracleLargeDegrees) {
    std::mt19937_64 rng(3);
    for (unsigned m : {13u, 20u, 31u}) {
        const auto f = field_new(m);
        const std::uint64_t mod = f.modulus().mask();
        for (int i = 0; i < 2000; ++i) {
            const auto a = static_cast<std::uint32_t>(rng() % f.size()), b = static_cast<std::uint32_t>(rng() % f.size());
            ASSERT_EQ(f.mul({a}, {b}).value, oracle::gf_mul(a, b, mod, m));
        }
    }
}

TEST(FiniteField, DefaultModuliArePrimitive) {
    for (unsigned m = kMinFieldDegree; m <= kMaxFieldDegree; ++m) EXPECT_NO_THROW(field_new(m)) << m;
    // independent order count for the small ones
    for (unsigned m = 3; m <= 16; ++m) {
        const std::uint64_t mod = kDefaultModulus[m];
        std::uint64_t x = 2, order = 1;
        while (x != 1) {
            x = oracle::gf_mul(x, 2, mod, m);
            ++order;
        }
        EXPECT_EQ(order, (std::uint64_t{1} << m) - 1) << m;
    }
}

TEST(FiniteField, RejectsBadModuli) {
    try {
        field_new(4, BinaryPolynomial::parse("x^4+1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("is not irreducible"), std::string::npos);
    }
    try {
        field_new(4, BinaryPolynomial::parse("x^4+x^3+x^2+x+1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("is not primitive"), std::string::npos);
    }
    EXPECT_THROW(field_new(2), Error);
    EXPECT_THROW(field_new(32), Error);
    EXPECT_THROW(field_new(5, BinaryPolynomial::parse("x^4+x+1")), Error);
}

TEST(FiniteField, InversesAndOrders) {
    const auto f = field_new(8);
    for (std::uint32_t a = 1; a < f.size(); ++a) {
        EXPECT_EQ(f.mul({a}, f.inverse({a})), f.one());
        EXPECT_EQ(f.group_order() % f.order_of({a}), 0u);
    }
    EXPECT_THROW(f.inverse(f.zero()), Error);
}

TEST(CyclotomicCoset, SmallCases) {
    EXPECT_EQ(cyclotomic_coset(1, 31), (std::vector<std::uint64_t>{1, 2, 4, 8, 16}));
    EXPECT_EQ(cyclotomic_coset(0, 31), (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(cyclotomic_coset(5, 15), (std::vector<std::uint64_t>{5, 10}));
    EXPECT_EQ(cyclotomic_coset(3, 63), (std::vector<std::uint64_t>{3, 6, 12, 24, 33, 48}));
}

TEST(CyclotomicCoset, CosetsPartitionTheResidues) {
    for (std::uint64_t n : {7u, 31u, 63u, 127u, 255u}) {
        std::set<std::uint64_t> seen;
        std::size_t total = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto c = cyclotomic_coset(i, n);
            EXPECT_TRUE(std::find(c.begin(), c.end(), i) != c.end());
            if (c.front() != i) continue;
            total += c.size();
            seen.insert(c.begin(), c.end());
        }
        EXPECT_EQ(total, n);
        EXPECT_EQ(seen.size(), n);
    }
}

TEST(MinimalPolynomial, MatchesExhaustiveSearch) {
    for (unsigned m = 3; m <= 7; ++m) {
        const auto f = field_new(m);
        const std::uint64_t mod = f.modulus().mask();
        for (std::uint64_t i = 0; i < f.group_order(); ++i) {
            const auto p = minimal_polynomial(i, f);
            EXPECT_EQ(p.mask(), oracle::minimal_polynomial_search(i, mod, m)) << "m=" << m << " i=" << i;
            EXPECT_EQ(static_cast<std::size_t>(p.degree()), cyclotomic_coset(i, f.group_order()).size());
        }
    }
}

TEST(MinimalPolynomial, KnownValues) {
    const auto f = field_new(5);
    EXPECT_EQ(minimal_polynomial(1, f), f.modulus());
    EXPECT_EQ(minimal_polynomial(0, f), BinaryPolynomial::parse("x+1"));
    EXPECT_EQ(minimal_polynomial(3, f), BinaryPolynomial::parse("x^5+x^4+x^3+x^2+1"));
}
