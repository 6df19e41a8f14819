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

#ifndef DESIGNCRAFT_FAMILIES_HPP
#define DESIGNCRAFT_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "big_int.hpp"
#include "error.hpp"
#include "weight_enum.hpp"

namespace designcraft {

/// The four codes derived from C_m that hold designs.
enum class DesignFamily {
    Primal,        // C_m itself, 2-designs on 2^m - 1 points
    Dual,          // C_m^perp, 2-designs on 2^m - 1 points
    DoubleDual,    // dual of the extended dual, 3-designs on 2^m points
    ExtendedDual,  // extended C_m^perp, 3-designs on 2^m points
};

inline std::string to_string(DesignFamily f) {
    switch (f) {
        case DesignFamily::Primal: return "primal";
        case DesignFamily::Dual: return "dual";
        case DesignFamily::DoubleDual: return "double-dual";
        case DesignFamily::ExtendedDual: return "extended-dual";
    }
    return "?";
}

inline unsigned design_strength(DesignFamily f) { return (f == DesignFamily::Primal || f == DesignFamily::Dual) ? 2 : 3; }

inline std::size_t design_points(DesignFamily f, unsigned m) {
    const std::size_t len = std::size_t{1} << m;
    return (f == DesignFamily::Primal || f == DesignFamily::Dual) ? len - 1 : len;
}

/// Block sizes with a closed-form lambda. The weight-9 dual and weight-10
/// extended-dual cases need m >= 7.
inline std::vector<std::size_t> tabulated_block_sizes(unsigned m, DesignFamily f) {
    switch (f) {
        case DesignFamily::Primal:
        case DesignFamily::DoubleDual: {
            const auto w = table1_params(m).weights;
            return {w.begin(), w.end()};
        }
        case DesignFamily::Dual: return m >= 7 ? std::vector<std::size_t>{7, 8, 9} : std::vector<std::size_t>{7, 8};
        case DesignFamily::ExtendedDual: return m >= 7 ? std::vector<std::size_t>{8, 10, 12} : std::vector<std::size_t>{8, 12};
    }
    return {};
}

namespace detail {

[[noreturn]] inline void unsupported_case(unsigned m, DesignFamily f, std::size_t k) {
    throw Error(ErrorKind::InvalidArgument,
                "unsupported case: no tabulated formula for " + to_string(f) + " weight " + std::to_string(k) + " at m=" + std::to_string(m));
}

inline std::size_t weight_slot(const Table1Params& p, std::size_t k) {
    for (std::size_t i = 0; i < 5; ++i)
        if (p.weights[i] == k) return i;
    return 5;
}

}  // namespace detail

/// Closed-form lambda of the design held by weight-k codewords of a family.
inline BigInt closed_form_lambda(unsigned m, DesignFamily family, std::size_t k) {
    const auto p = table1_params(m);
    const BigInt h1 = pow2(m - 1);     // 2^(m-1)
    const BigInt r1 = pow2((m - 1) / 2);  // 2^((m-1)/2)
    const BigInt r3 = pow2((m - 3) / 2);
    const BigInt r5 = pow2((m - 5) / 2);
    const BigInt quartic7 = pow2(2 * (m - 1)) - 5 * h1 + 34;
    const BigInt quartic9 = pow2(2 * (m - 1)) - h1 + 28;
    const BigInt c_core = 9 * pow2(2 * m - 4) + 3 * pow2(m - 3) + 1;
    const std::string what = "lambda formula for " + to_string(family) + " weight " + std::to_string(k) + " is not an integer";
    const BigInt kk = k;

    switch (family) {
        case DesignFamily::Primal:
            switch (detail::weight_slot(p, k)) {
                case 0: return exact_div(r5 * (r3 + 1) * kk * (kk - 1), 6, what);
                case 1: return exact_div(pow2(m - 2) * (h1 - r1 - 1) * (5 * h1 + 4), 6, what);
                case 2: return pow2(m - 2) * c_core;
                case 3: return exact_div(pow2(m - 2) * (h1 + r1 - 1) * (5 * h1 + 4), 6, what);
                case 4: return exact_div(r5 * (r3 - 1) * kk * (kk - 1), 6, what);
                default: break;
            }
            break;
        case DesignFamily::Dual:
            if (k == 7) return exact_div(quartic7, 30, what);
            if (k == 8) return exact_div((h1 - 4) * quartic7, 90, what);
            if (k == 9 && m >= 7) return exact_div((h1 - 4) * (h1 - 16) * quartic9, 315, what);
            break;
        case DesignFamily::DoubleDual:
            switch (detail::weight_slot(p, k)) {
                case 0:
                case 4: return exact_div(kk * (kk - 1) * (kk - 2), 48, what);
                case 1: return exact_div(r1 * (h1 - r1 - 1) * (r1 - 2) * (5 * pow2(m - 3) + 1), 3, what);
                case 2: return (pow2(m - 2) - 1) * c_core;
                case 3: return exact_div(r1 * (h1 + r1 - 1) * (r1 + 2) * (5 * pow2(m - 3) + 1), 3, what);
                default: break;
            }
            break;
        case DesignFamily::ExtendedDual:
            if (k == 8) return exact_div(quartic7, 30, what);
            if (k == 10 && m >= 7) return exact_div((h1 - 4) * (h1 - 16) * quartic9, 315, what);
            if (k == 12) {
                const unsigned h = m - 1;
                const BigInt poly = 2 * pow2(5 * h) - 55 * pow2(4 * h) + 647 * pow2(3 * h) - 2727 * pow2(2 * h) + 11541 * pow2(h) - 47208;
                return exact_div((pow2(h - 2) - 1) * poly, 2835, what);
            }
            break;
    }
    detail::unsupported_case(m, family, k);
}

/// Closed-form block count (frequency of weight k) as written alongside each
/// low-weight lambda formula.
inline BigInt closed_form_block_count(unsigned m, DesignFamily family, std::size_t k) {
    const auto p = table1_params(m);
    const BigInt n = pow2(m) - 1;
    const BigInt h1 = pow2(m - 1);
    const BigInt quartic7 = pow2(2 * (m - 1)) - 5 * h1 + 34;
    const BigInt quartic9 = pow2(2 * (m - 1)) - h1 + 28;
    const std::string what = "block count formula for " + to_string(family) + " weight " + std::to_string(k) + " is not an integer";

    switch (family) {
        case DesignFamily::Primal: {
            const auto slot = detail::weight_slot(p, k);
            if (slot < 5) return p.freqs[slot];
            break;
        }
        case DesignFamily::DoubleDual: {
            const auto slot = detail::weight_slot(p, k);
            const auto dd = double_dual_params(m);
            if (slot == 0 || slot == 4) return dd.u;
            if (slot == 1 || slot == 3) return dd.freq_v;
            if (slot == 2) return dd.w;
            break;
        }
        case DesignFamily::Dual:
            if (k == 7) return exact_div((h1 - 1) * n * quartic7, 630, what);
            if (k == 8) return exact_div((h1 - 1) * (h1 - 4) * n * quartic7, 2520, what);
            if (k == 9 && m >= 7) return exact_div((h1 - 1) * (h1 - 4) * (h1 - 16) * n * quartic9, 11340, what);
            break;
        case DesignFamily::ExtendedDual:
            if (k == 8) return exact_div(pow2(m) * (h1 - 1) * n * quartic7, 315, what);
            if (k == 10 && m >= 7) return exact_div(h1 * (h1 - 1) * n * (h1 - 4) * (h1 - 16) * quartic9, 4 * 14175, what);
            if (k == 12) {
                const BigInt e2 = pow2(m - 1);  // epsilon^2
                const BigInt poly = 2 * e2 * e2 * e2 * e2 * e2 - 55 * e2 * e2 * e2 * e2 + 647 * e2 * e2 * e2 - 2727 * e2 * e2 + 11541 * e2 - 47208;
                return exact_div(e2 * (e2 - 1) * (e2 - 4) * (2 * e2 - 1) * poly, 8 * 467775, what);
            }
            break;
    }
    detail::unsupported_case(m, family, k);
}

/// A_7 of the dual written in x = 2^((m-1)/2): (x^2-1)(2x^2-1)(x^4-5x^2+34)/630.
inline BigInt dual_weight7_count(unsigned m) {
    const BigInt x2 = pow2(m - 1);
    return exact_div((x2 - 1) * (2 * x2 - 1) * (x2 * x2 - 5 * x2 + 34), 630, "weight-7 dual count is not an integer");
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_FAMILIES_HPP
