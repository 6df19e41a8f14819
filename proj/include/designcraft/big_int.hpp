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

#ifndef DESIGNCRAFT_BIG_INT_HPP
#define DESIGNCRAFT_BIG_INT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace designcraft {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent) {
    BigInt r = 1;
    r <<= exponent;
    return r;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Divides `numerator` by `denominator`, throwing ErrorKind::Inconsistent with
/// `what` when the quotient is not an integer.
inline BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const std::string& what) {
    if (denominator == 0) throw Error(ErrorKind::Inconsistent, what + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(numerator, denominator, q, r);
    if (r != 0) throw Error(ErrorKind::Inconsistent, what);
    return q;
}

inline bool divides(const BigInt& divisor, const BigInt& value) {
    if (divisor == 0) return value == 0;
    return value % divisor == 0;
}

/// Memoized rows of Pascal's triangle. Rows are materialized on demand, so a
/// handful of long rows (n = 2^m) cost O(n) each rather than O(n^2) for the
/// whole triangle.
class BinomialTable {
public:
    const std::vector<BigInt>& row(unsigned n) {
        auto it = rows_.find(n);
        if (it != rows_.end()) return it->second;
        std::vector<BigInt> r(n + 1);
        r[0] = 1;
        for (unsigned k = 0; k < n; ++k) r[k + 1] = r[k] * (n - k) / (k + 1);
        return rows_.emplace(n, std::move(r)).first->second;
    }

    BigInt operator()(long long n, long long k) {
        if (n < 0 || k < 0 || k > n) return 0;
        return row(static_cast<unsigned>(n))[static_cast<std::size_t>(k)];
    }

private:
    std::map<unsigned, std::vector<BigInt>> rows_;
};

inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Binomial coefficient in 64 bits, saturating at UINT64_MAX.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_BIG_INT_HPP
