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

#ifndef DESIGNCRAFT_FINITE_FIELD_HPP
#define DESIGNCRAFT_FINITE_FIELD_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binary_polynomial.hpp"
#include "error.hpp"

namespace designcraft {

inline constexpr unsigned kMinFieldDegree = 3;
inline constexpr unsigned kMaxFieldDegree = 31;

/// Smallest-integer primitive polynomial of each degree 3..31 (index = m).
inline constexpr std::array<std::uint64_t, 32> kDefaultModulus = {
    0, 0, 0,
    0xb,        0x13,       0x25,       0x43,       0x83,       0x11d,      0x211,      0x409,
    0x805,      0x1053,     0x201b,     0x402b,     0x8003,     0x1002d,    0x20009,    0x40027,
    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,   0x100001b,  0x2000009,  0x4000047,
    0x8000027,  0x10000009, 0x20000005, 0x40000053, 0x80000009,
};

/// Element of GF(2^m) in polynomial basis: bit j is the coefficient of x^j.
struct FieldElement {
    std::uint32_t value = 0;

    friend bool operator==(FieldElement, FieldElement) = default;
};

namespace detail {

inline std::uint64_t poly_mod_u64(std::uint64_t a, std::uint64_t b) {
    const int db = 63 - std::countl_zero(b);
    for (int da = a ? 63 - std::countl_zero(a) : -1; da >= db; da = a ? 63 - std::countl_zero(a) : -1)
        a ^= b << (da - db);
    return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// True when the degree-m polynomial `mask` has no factor of degree 1..m/2.
inline bool is_irreducible(std::uint64_t mask) {
    if (mask < 2) return false;
    const int m = 63 - std::countl_zero(mask);
    for (std::uint64_t g = 2; g < (std::uint64_t{1} << (m / 2 + 1)); ++g)
        if (detail::poly_mod_u64(mask, g) == 0) return false;
    return true;
}

/// GF(2^m) context. Immutable after construction.
class FieldSpec {
public:
    /// Validates the modulus (irreducible, x primitive). Without a modulus the
    /// default table entry is used.
    static FieldSpec create(unsigned m, std::optional<BinaryPolynomial> modulus = std::nullopt) {
        if (m < kMinFieldDegree || m > kMaxFieldDegree)
            throw Error(ErrorKind::InvalidArgument, "field degree m=" + std::to_string(m) + " out of range");
        const BinaryPolynomial f = modulus ? *modulus : BinaryPolynomial::from_mask(kDefaultModulus[m]);
        if (f.degree() != static_cast<long long>(m))
            throw Error(ErrorKind::InvalidArgument, "modulus " + f.to_string() + " does not have degree " + std::to_string(m));
        if (!is_irreducible(f.mask()))
            throw Error(ErrorKind::InvalidArgument, "modulus " + f.to_string() + " is not irreducible");
        FieldSpec ctx(m, f.mask());
        if (ctx.order_of(ctx.x()) != ctx.group_order())
            throw Error(ErrorKind::InvalidArgument, "modulus " + f.to_string() + " is not primitive");
        return ctx;
    }

    unsigned m() const { return m_; }
    std::uint64_t size() const { return std::uint64_t{1} << m_; }
    /// 2^m - 1
    std::uint64_t group_order() const { return size() - 1; }
    BinaryPolynomial modulus() const { return BinaryPolynomial::from_mask(modulus_); }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// The class of x, which generates the multiplicative group.
    FieldElement x() const { return {2}; }

    bool contains(FieldElement a) const { return a.value < size(); }

    FieldElement add(FieldElement a, FieldElement b) const { return {a.value ^ b.value}; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        std::uint64_t acc = 0;
        std::uint64_t sh = a.value;
        const std::uint64_t top = std::uint64_t{1} << m_;
        for (std::uint32_t bb = b.value; bb != 0; bb >>= 1) {
            if (bb & 1u) acc ^= sh;
            sh <<= 1;
            if (sh & top) sh ^= modulus_;
        }
        return {static_cast<std::uint32_t>(acc)};
    }

    FieldElement pow(FieldElement a, std::uint64_t e) const {
        FieldElement r = one();
        while (e != 0) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// alpha^e with alpha = x
    FieldElement alpha_pow(std::uint64_t e) const { return pow(x(), e % group_order()); }

    FieldElement inverse(FieldElement a) const {
        if (a.value == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse");
        return pow(a, group_order() - 1);
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order_of(FieldElement a) const {
        if (a.value == 0) throw Error(ErrorKind::InvalidArgument, "zero has no multiplicative order");
        std::uint64_t ord = group_order();
        for (std::uint64_t p : detail::prime_factors(group_order()))
            while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
        return ord;
    }

private:
    FieldSpec(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {}

    unsigned m_;
    std::uint64_t modulus_;
};

inline FieldSpec field_new(unsigned m, std::optional<BinaryPolynomial> modulus = std::nullopt) {
    return FieldSpec::create(m, std::move(modulus));
}

inline FieldElement mul(FieldElement a, FieldElement b, const FieldSpec& ctx) { return ctx.mul(a, b); }

/// { i * 2^j mod n }, sorted; the front element is the coset leader.
inline std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic coset modulus must be positive");
    i %= n;
    std::vector<std::uint64_t> coset;
    std::uint64_t j = i;
    do {
        coset.push_back(j);
        j = static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * 2) % n);
    } while (j != i);
    std::sort(coset.begin(), coset.end());
    return coset;
}

/// Minimal polynomial of alpha^i over GF(2): the product of (x - alpha^j) over
/// the cyclotomic coset of i, expanded in GF(2^m)[x].
inline BinaryPolynomial minimal_polynomial(std::uint64_t i, const FieldSpec& ctx) {
    const std::uint64_t n = ctx.group_order();
    std::vector<FieldElement> coeffs{ctx.one()};
    for (std::uint64_t j : cyclotomic_coset(i, n)) {
        const FieldElement root = ctx.alpha_pow(j);
        std::vector<FieldElement> next(coeffs.size() + 1, ctx.zero());
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] = ctx.add(next[d + 1], coeffs[d]);
            next[d] = ctx.add(next[d], ctx.mul(coeffs[d], root));
        }
        coeffs = std::move(next);
    }
    BinaryPolynomial p;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].value > 1)
            throw Error(ErrorKind::Inconsistent, "minimal polynomial of alpha^" + std::to_string(i) + " has a non-binary coefficient");
        if (coeffs[d].value == 1) p.set_coefficient(d, true);
    }
    return p;
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_FINITE_FIELD_HPP
