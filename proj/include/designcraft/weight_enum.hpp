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

#ifndef DESIGNCRAFT_WEIGHT_ENUM_HPP
#define DESIGNCRAFT_WEIGHT_ENUM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "big_int.hpp"
#include "error.hpp"
#include "weight_distribution.hpp"

namespace designcraft {

/// Coefficients of (1 - z)^i (1 + (q-1) z)^(n-i), i.e. the Krawtchouk values
/// K_0(i), ..., K_n(i). Uses the exact three-term recurrence obtained from the
/// logarithmic derivative,
///   (k+1) c_{k+1} = ((n-i)(q-1) - i - (q-2) k) c_k - (q-1)(n-k+1) c_{k-1},
/// so one column costs O(n) big-integer operations.
inline std::vector<BigInt> krawtchouk_column(std::size_t n, std::size_t i, unsigned q = 2) {
    if (i > n) throw Error(ErrorKind::InvalidArgument, "krawtchouk column index exceeds length");
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "alphabet size must be at least 2");
    const long long r = static_cast<long long>(q) - 1;
    const long long nn = static_cast<long long>(n);
    const long long ii = static_cast<long long>(i);
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    if (n == 0) return c;
    c[1] = BigInt((nn - ii) * r - ii);
    for (long long k = 1; k < nn; ++k) {
        BigInt next = BigInt((nn - ii) * r - ii - (r - 1) * k) * c[static_cast<std::size_t>(k)] -
                      BigInt(r * (nn - k + 1)) * c[static_cast<std::size_t>(k - 1)];
        c[static_cast<std::size_t>(k + 1)] = exact_div(next, k + 1, "krawtchouk recurrence");
    }
    return c;
}

/// Coefficients of (1 - z)^a (1 + z)^b.
inline std::vector<BigInt> signed_binomial_product(std::size_t a, std::size_t b) { return krawtchouk_column(a + b, a, 2); }

/// Weight distribution of the dual of a q-ary [n, kappa] code.
inline WeightDistribution macwilliams(const WeightDistribution& wd, unsigned k_dim, unsigned q = 2) {
    const std::size_t n = wd.length();
    BigInt size = 1;
    for (unsigned i = 0; i < k_dim; ++i) size *= q;
    if (wd.total() != size) throw Error(ErrorKind::InvalidArgument, "not a valid code distribution: counts do not sum to q^kappa");
    std::vector<BigInt> acc(n + 1, 0);
    for (std::size_t i : wd.support()) {
        const auto column = krawtchouk_column(n, i, q);
        for (std::size_t j = 0; j <= n; ++j) acc[j] += wd[i] * column[j];
    }
    WeightDistribution out(n);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt quotient, remainder;
        boost::multiprecision::divide_qr(acc[j], size, quotient, remainder);
        if (remainder != 0 || quotient < 0)
            throw Error(ErrorKind::InvalidArgument, "not a valid code distribution: dual count at weight " + std::to_string(j) + " is not a nonnegative integer");
        out[j] = quotient;
    }
    return out;
}

namespace detail {

inline void require_odd_m(unsigned m) {
    if (m % 2 == 0 || m < 5) throw Error(ErrorKind::InvalidArgument, "m must be odd and at least 5, got " + std::to_string(m));
    if (m > 61) throw Error(ErrorKind::InvalidArgument, "m too large");
}

}  // namespace detail

/// Weights and frequencies of the five-weight code C_m (m odd, m >= 5).
struct Table1Params {
    unsigned m = 0;
    /// 2^(m-1) - 2^((m+1)/2), 2^(m-1) - 2^((m-1)/2), 2^(m-1), 2^(m-1) + 2^((m-1)/2), 2^(m-1) + 2^((m+1)/2)
    std::array<std::uint64_t, 5> weights{};
    /// a, b, c, d, e in weight order
    std::array<BigInt, 5> freqs{};
    /// 2^((m-1)/2); also written epsilon
    std::uint64_t x = 0;
    unsigned h = 0;  // m - 1

    std::uint64_t length() const { return (std::uint64_t{1} << m) - 1; }
};

inline Table1Params table1_params(unsigned m) {
    detail::require_odd_m(m);
    Table1Params p;
    p.m = m;
    p.h = m - 1;
    p.x = std::uint64_t{1} << ((m - 1) / 2);
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    const std::uint64_t hi = std::uint64_t{1} << ((m + 1) / 2);
    const std::uint64_t lo = std::uint64_t{1} << ((m - 1) / 2);
    p.weights = {half - hi, half - lo, half, half + lo, half + hi};

    const BigInt n = pow2(m) - 1;
    const BigInt r5 = pow2((m - 5) / 2);
    const BigInt r3 = pow2((m - 3) / 2);
    const BigInt r1 = pow2((m - 1) / 2);
    const BigInt h1 = pow2(m - 1);
    p.freqs[0] = exact_div(n * r5 * (r3 + 1) * (h1 - 1), 3, "table 1 frequency a is not an integer");
    p.freqs[1] = exact_div(n * r3 * (r1 + 1) * (5 * h1 + 4), 3, "table 1 frequency b is not an integer");
    p.freqs[2] = n * (9 * pow2(2 * m - 4) + 3 * pow2(m - 3) + 1);
    p.freqs[3] = exact_div(n * r3 * (r1 - 1) * (5 * h1 + 4), 3, "table 1 frequency d is not an integer");
    p.freqs[4] = exact_div(n * r5 * (r3 - 1) * (h1 - 1), 3, "table 1 frequency e is not an integer");
    return p;
}

inline WeightDistribution table1_distribution(unsigned m) {
    const auto p = table1_params(m);
    WeightDistribution wd(p.length());
    wd[0] = 1;
    for (std::size_t i = 0; i < 5; ++i) wd[p.weights[i]] = p.freqs[i];
    return wd;
}

/// Frequencies of the double-dual code: u at 2^(m-1) -/+ 2^((m+1)/2),
/// freq_v at 2^(m-1) -/+ 2^((m-1)/2), w at 2^(m-1).
struct DoubleDualParams {
    unsigned m = 0;
    BigInt u, freq_v, w;
};

inline DoubleDualParams double_dual_params(unsigned m) {
    detail::require_odd_m(m);
    DoubleDualParams p;
    p.m = m;
    p.u = exact_div(pow2(3 * m - 4) - 3 * pow2(2 * m - 4) + pow2(m - 3), 3, "double-dual frequency u is not an integer");
    p.freq_v = exact_div(5 * pow2(3 * m - 2) + 3 * pow2(2 * m - 2) - pow2(m + 1), 3, "double-dual frequency v is not an integer");
    p.w = 2 * (pow2(m) - 1) * (9 * pow2(2 * m - 4) + 3 * pow2(m - 3) + 1);
    return p;
}

/// Dual of C_m evaluated term by term:
///   2^(3m) A_k = C(n, k) + sum over the five weights of freq * U(k),
/// where U is the coefficient sequence of (1 - z)^weight (1 + z)^(n - weight).
inline WeightDistribution dual_closed_form(unsigned m) {
    const auto p = table1_params(m);
    const std::size_t n = p.length();
    BinomialTable binom;
    const auto& leading = binom.row(static_cast<unsigned>(n));
    std::vector<BigInt> acc(leading.begin(), leading.end());
    for (std::size_t t = 0; t < 5; ++t) {
        const auto u = signed_binomial_product(p.weights[t], n - p.weights[t]);
        for (std::size_t k = 0; k <= n; ++k) acc[k] += p.freqs[t] * u[k];
    }
    const BigInt scale = pow2(3 * m);
    WeightDistribution wd(n);
    for (std::size_t k = 0; k <= n; ++k)
        wd[k] = exact_div(acc[k], scale, "formula inconsistency: dual count at weight " + std::to_string(k) + " is not an integer");
    return wd;
}

inline WeightDistribution double_dual_closed_form(unsigned m) {
    const auto t1 = table1_params(m);
    const auto p = double_dual_params(m);
    const std::size_t len = std::size_t{1} << m;
    WeightDistribution wd(len);
    wd[0] = 1;
    wd[len] = 1;
    wd[t1.weights[0]] = p.u;
    wd[t1.weights[1]] = p.freq_v;
    wd[t1.weights[2]] = p.w;
    wd[t1.weights[3]] = p.freq_v;
    wd[t1.weights[4]] = p.u;
    return wd;
}

/// Extended dual of C_m:
///   2^(3m+1) A_k = (1 + (-1)^k) C(2^m, k) + w E_0(k) + u E_1(k) + v E_2(k) + v E_3(k) + u E_4(k)
/// with E_0 the even-index expansion of (1 - z^2)^(2^(m-1)).
inline WeightDistribution extended_dual_closed_form(unsigned m) {
    const auto t1 = table1_params(m);
    const auto p = double_dual_params(m);
    const std::size_t len = std::size_t{1} << m;
    const std::size_t half = len / 2;
    BinomialTable binom;
    const auto& full = binom.row(static_cast<unsigned>(len));
    const auto& halves = binom.row(static_cast<unsigned>(half));
    std::vector<BigInt> acc(len + 1, 0);
    for (std::size_t k = 0; k <= len; k += 2) {
        acc[k] = 2 * full[k];
        const BigInt e0 = ((k / 2) % 2 == 0) ? halves[k / 2] : BigInt(-halves[k / 2]);
        acc[k] += p.w * e0;
    }
    const std::array<std::size_t, 4> weights = {t1.weights[0], t1.weights[1], t1.weights[3], t1.weights[4]};
    const std::array<const BigInt*, 4> freqs = {&p.u, &p.freq_v, &p.freq_v, &p.u};
    for (std::size_t t = 0; t < 4; ++t) {
        const auto e = signed_binomial_product(weights[t], len - weights[t]);
        for (std::size_t k = 0; k <= len; ++k) acc[k] += *freqs[t] * e[k];
    }
    const BigInt scale = pow2(3 * m + 1);
    WeightDistribution wd(len);
    for (std::size_t k = 0; k <= len; ++k)
        wd[k] = exact_div(acc[k], scale, "formula inconsistency: extended-dual count at weight " + std::to_string(k) + " is not an integer");
    return wd;
}

/// First and third power moments of a length-2^m code of dimension 3m + 1
/// whose dual has minimum distance at least 4:
///   sum A_i = 2^(3m+1),  sum i^2 A_i = 2^(3m-1) 2^m (2^m + 1).
inline bool pless_check(const WeightDistribution& wd, unsigned m) {
    if (wd.length() != (std::size_t{1} << m)) return false;
    BigInt s0 = 0, s2 = 0;
    for (std::size_t i = 0; i <= wd.length(); ++i) {
        s0 += wd[i];
        s2 += BigInt(i) * i * wd[i];
    }
    return s0 == pow2(3 * m + 1) && s2 == pow2(3 * m - 1) * pow2(m) * (pow2(m) + 1);
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_WEIGHT_ENUM_HPP
