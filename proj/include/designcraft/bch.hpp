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

#ifndef DESIGNCRAFT_BCH_HPP
#define DESIGNCRAFT_BCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "binary_polynomial.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"

namespace designcraft {

/// Primitive BCH code of length n = 2^m - 1 whose generator has the zeros
/// alpha^offset, ..., alpha^(offset + delta - 2), indices taken mod n.
struct BchSpec {
    unsigned m = 0;
    std::uint64_t n = 0;
    std::uint64_t delta = 0;
    std::uint64_t offset = 0;

    static BchSpec primitive(unsigned m, std::uint64_t delta, std::uint64_t offset) {
        return {m, (std::uint64_t{1} << m) - 1, delta, offset};
    }
};

/// Coset leaders hit by the window offset..offset+delta-2 (mod n), ascending
/// by first appearance in the window.
inline std::vector<std::uint64_t> bch_coset_leaders(const BchSpec& spec) {
    if (spec.delta < 2) throw Error(ErrorKind::InvalidArgument, "designed distance too small (delta must be >= 2)");
    if (spec.delta > spec.n) throw Error(ErrorKind::InvalidArgument, "designed distance exceeds the code length");
    if (spec.offset >= spec.n) throw Error(ErrorKind::InvalidArgument, "offset must be below n");
    std::vector<char> covered(spec.n, 0);
    std::vector<std::uint64_t> leaders;
    for (std::uint64_t i = 0; i + 2 <= spec.delta; ++i) {
        const std::uint64_t idx = (spec.offset + i) % spec.n;
        if (covered[idx]) continue;
        const auto coset = cyclotomic_coset(idx, spec.n);
        for (auto j : coset) covered[j] = 1;
        leaders.push_back(coset.front());
    }
    return leaders;
}

/// lcm(M_offset, ..., M_{offset+delta-2}) as the product of one minimal
/// polynomial per distinct cyclotomic coset (distinct cosets are coprime).
inline BinaryPolynomial bch_generator(const BchSpec& spec, const FieldSpec& ctx) {
    if (ctx.m() != spec.m) throw Error(ErrorKind::InvalidArgument, "field degree does not match the BCH spec");
    BinaryPolynomial g = BinaryPolynomial::from_mask(1);
    for (auto leader : bch_coset_leaders(spec)) g = g * minimal_polynomial(leader, ctx);
    return g;
}

/// Cyclic code of length n with generator g: rows x^i g(x) for 0 <= i < n - deg g.
inline LinearCode cyclic_code(const BinaryPolynomial& g, std::uint64_t n) {
    const long long deg = g.degree();
    if (deg < 0 || static_cast<std::uint64_t>(deg) >= n)
        throw Error(ErrorKind::InvalidArgument, "generator degree must be in [0, n)");
    if (!g.divides(BinaryPolynomial::x_pow_n_plus_one(n)))
        throw Error(ErrorKind::Construction, "generator does not divide x^n + 1");
    const std::uint64_t k = n - static_cast<std::uint64_t>(deg);
    std::vector<std::vector<Word>> rows;
    rows.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::vector<Word> v(words_for(n), 0);
        for (long long j = 0; j <= deg; ++j)
            if (g.coefficient(static_cast<std::uint64_t>(j))) flip_bit(v, static_cast<std::size_t>(i + static_cast<std::uint64_t>(j)));
        rows.push_back(std::move(v));
    }
    return LinearCode(n, rows);
}

/// Generator polynomial of the dual of the cyclic code generated by g:
/// the reciprocal of the check polynomial (x^n + 1) / g.
inline BinaryPolynomial dual_cyclic_generator(const BinaryPolynomial& g, std::uint64_t n) {
    const auto [h, rem] = divmod(BinaryPolynomial::x_pow_n_plus_one(n), g);
    if (!rem.is_zero()) throw Error(ErrorKind::Construction, "generator does not divide x^n + 1");
    return h.reciprocal();
}

inline LinearCode bch_code(const BchSpec& spec, const FieldSpec& ctx) { return cyclic_code(bch_generator(spec, ctx), spec.n); }

enum class CmVariant {
    BchB0,        // C_(2, 2^m-1, 2^(m-1)-1-2^((m+1)/2), 0)
    DualNarrow7,  // dual of the narrow-sense C_(2, 2^m-1, 7, 1)
};

inline std::string to_string(CmVariant v) { return v == CmVariant::BchB0 ? "bch0" : "dual-narrow7"; }

inline std::uint64_t c_m_designed_distance(unsigned m) {
    return (std::uint64_t{1} << (m - 1)) - 1 - (std::uint64_t{1} << ((m + 1) / 2));
}

/// The [2^m - 1, 3m] five-weight code by either construction.
inline LinearCode build_c_m(unsigned m, CmVariant variant, const FieldSpec& ctx) {
    if (m % 2 == 0) throw Error(ErrorKind::InvalidArgument, "m must be odd");
    if (m < 5) throw Error(ErrorKind::InvalidArgument, "m must be at least 5");
    if (ctx.m() != m) throw Error(ErrorKind::InvalidArgument, "field degree does not match m");
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    BinaryPolynomial g;
    if (variant == CmVariant::BchB0) {
        g = bch_generator(BchSpec::primitive(m, c_m_designed_distance(m), 0), ctx);
    } else {
        g = dual_cyclic_generator(bch_generator(BchSpec::primitive(m, 7, 1), ctx), n);
    }
    if (n - static_cast<std::uint64_t>(g.degree()) != 3ull * m)
        throw Error(ErrorKind::Construction, "construction failed dimension check: generator degree " + std::to_string(g.degree()) +
                                                 " gives dimension " + std::to_string(n - static_cast<std::uint64_t>(g.degree())) +
                                                 ", expected " + std::to_string(3 * m));
    return cyclic_code(g, n);
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_BCH_HPP
