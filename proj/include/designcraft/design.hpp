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

#ifndef DESIGNCRAFT_DESIGN_HPP
#define DESIGNCRAFT_DESIGN_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "big_int.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "linear_code.hpp"
#include "weight_distribution.hpp"
#include "weight_enum.hpp"

namespace designcraft {

/// Upper bound on the number of t-subset counters verify_t_design allocates.
inline constexpr std::uint64_t kMaxDesignCounters = 10'000'000;

/// A simple block design: `v` points and distinct blocks of equal size `k`.
/// Blocks are stored as packed point bitsets and kept in lexicographic order
/// of their sorted index sequences.
class Design {
public:
    Design(std::size_t v, std::size_t k, std::vector<Word> packed) : v_(v), k_(k), words_(words_for(v)), data_(std::move(packed)) {
        if (k_ == 0) throw Error(ErrorKind::InvalidArgument, "blocks must be nonempty");
        if (k_ >= v_) throw Error(ErrorKind::InvalidArgument, "trivial design: block size must be below the point count");
        if (data_.size() % words_ != 0) throw Error(ErrorKind::InvalidArgument, "packed block data is not a whole number of blocks");
        for (std::size_t b = 0; b < block_count(); ++b) {
            const auto blk = block_words(b);
            if (popcount(blk) != k_) throw Error(ErrorKind::InvalidArgument, "not uniform: block sizes differ");
            if (v_ % 64 != 0 && (blk[words_ - 1] >> (v_ % 64)) != 0) throw Error(ErrorKind::InvalidArgument, "block point out of range");
        }
        sort_blocks();
    }

    static Design from_supports(std::size_t v, const std::vector<SupportSet>& blocks) {
        if (blocks.empty()) throw Error(ErrorKind::InvalidArgument, "design has no blocks");
        const std::size_t k = blocks.front().size();
        const std::size_t words = words_for(v);
        std::vector<Word> packed(blocks.size() * words, 0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& idx = blocks[b].indices;
            if (idx.size() != k) throw Error(ErrorKind::InvalidArgument, "not uniform: block sizes differ");
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (idx[i] >= v) throw Error(ErrorKind::InvalidArgument, "block point out of range");
                if (i > 0 && idx[i] <= idx[i - 1]) throw Error(ErrorKind::InvalidArgument, "block indices must be strictly increasing");
                flip_bit(std::span<Word>(packed.data() + b * words, words), idx[i]);
            }
        }
        return Design(v, k, std::move(packed));
    }

    std::size_t points() const { return v_; }
    std::size_t block_size() const { return k_; }
    std::size_t block_count() const { return data_.size() / words_; }
    std::size_t words_per_block() const { return words_; }

    std::span<const Word> block_words(std::size_t b) const { return {data_.data() + b * words_, words_}; }
    SupportSet block(std::size_t b) const { return SupportSet::of(block_words(b), v_); }

private:
    // Lexicographic order on index sequences of equal-size blocks: at the
    // lowest differing point, the block containing it comes first.
    void sort_blocks() {
        const std::size_t count = block_count();
        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), 0);
        auto less = [this](std::size_t a, std::size_t b) {
            const auto x = block_words(a);
            const auto y = block_words(b);
            for (std::size_t w = 0; w < words_; ++w) {
                const Word diff = x[w] ^ y[w];
                if (diff != 0) return (x[w] & (diff & (~diff + 1))) != 0;
            }
            return false;
        };
        std::sort(order.begin(), order.end(), less);
        std::vector<Word> sorted;
        sorted.reserve(data_.size());
        for (std::size_t i = 0; i < count; ++i) {
            const auto blk = block_words(order[i]);
            if (i > 0 && std::equal(blk.begin(), blk.end(), block_words(order[i - 1]).begin()))
                throw Error(ErrorKind::Inconsistent, "repeated block: design is not simple");
            sorted.insert(sorted.end(), blk.begin(), blk.end());
        }
        data_ = std::move(sorted);
    }

    std::size_t v_, k_, words_;
    std::vector<Word> data_;
};

/// Supports of every weight-w codeword as a design on the code's coordinates.
inline Design supports_to_design(const LinearCode& code, std::size_t w, const EnumerationOptions& opts = {}) {
    auto packed = collect_codewords_of_weight(code, w, opts);
    if (packed.empty()) throw Error(ErrorKind::InvalidArgument, "no blocks at weight " + std::to_string(w));
    return Design(code.length(), w, std::move(packed));
}

struct TDesignCheck {
    std::optional<std::uint64_t> lambda;  // set iff every t-subset count is equal
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
};

/// Counter budget: C(v, t).
inline std::uint64_t t_subset_count(std::size_t v, unsigned t) { return binomial_u64(v, t); }

/// Total counter increments: blocks * C(k, t).
inline std::uint64_t verification_work(const Design& d, unsigned t) {
    const auto per = binomial_u64(d.block_size(), t);
    const unsigned __int128 total = static_cast<unsigned __int128>(per) * d.block_count();
    return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

namespace detail {

// rank of {c_0 < c_1 < ... < c_{t-1}} = sum_i C(c_i, i + 1)
class ColexRanker {
public:
    ColexRanker(std::size_t v, unsigned t) : t_(t), table_((v + 1) * (t + 1), 0) {
        for (std::size_t x = 0; x <= v; ++x)
            for (unsigned j = 0; j <= t; ++j) table_[x * (t + 1) + j] = binomial_u64(x, j);
    }
    std::uint64_t c(std::size_t x, unsigned j) const { return table_[x * (t_ + 1) + j]; }

private:
    unsigned t_;
    std::vector<std::uint64_t> table_;
};

inline void count_subsets(const std::vector<std::uint32_t>& pts, unsigned t, const ColexRanker& rk, std::vector<std::uint32_t>& counters) {
    const std::size_t k = pts.size();
    switch (t) {
        case 1:
            for (auto p : pts) ++counters[p];
            return;
        case 2:
            for (std::size_t b = 1; b < k; ++b) {
                const std::uint64_t rb = rk.c(pts[b], 2);
                for (std::size_t a = 0; a < b; ++a) ++counters[rb + pts[a]];
            }
            return;
        case 3:
            for (std::size_t c = 2; c < k; ++c) {
                const std::uint64_t rc = rk.c(pts[c], 3);
                for (std::size_t b = 1; b < c; ++b) {
                    const std::uint64_t rb = rc + rk.c(pts[b], 2);
                    std::uint32_t* row = counters.data() + rb;
                    for (std::size_t a = 0; a < b; ++a) ++row[pts[a]];
                }
            }
            return;
        default: break;
    }
    // general t: walk index tuples idx[0] < ... < idx[t-1]
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < t; ++i) r += rk.c(pts[idx[i]], i + 1);
        ++counters[r];
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - t + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Counts, for every t-subset of points, the blocks containing it. Reports
/// lambda when all counts agree, otherwise the observed min and max.
inline TDesignCheck verify_t_design(const Design& design, unsigned t, unsigned threads = default_threads()) {
    if (t == 0) throw Error(ErrorKind::InvalidArgument, "t must be positive");
    if (t >= design.block_size()) throw Error(ErrorKind::InvalidArgument, "t must be below the block size");
    const std::uint64_t counters = t_subset_count(design.points(), t);
    if (counters > kMaxDesignCounters)
        throw Error(ErrorKind::Budget, "verification too large: " + std::to_string(counters) + " t-subset counters");
    if (design.block_count() >= UINT32_MAX) throw Error(ErrorKind::Budget, "verification too large: too many blocks");

    const detail::ColexRanker ranker(design.points(), t);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, design.block_count() / 256))));
    std::vector<std::vector<std::uint32_t>> partial(threads);
    detail::for_each_slice(design.block_count(), threads, [&](unsigned w, std::uint64_t first, std::uint64_t last) {
        auto& local = partial[w];
        local.assign(counters, 0);
        std::vector<std::uint32_t> pts;
        for (std::uint64_t b = first; b < last; ++b) {
            pts = design.block(b).indices;
            detail::count_subsets(pts, t, ranker, local);
        }
    });
    TDesignCheck result;
    std::vector<std::uint64_t> merged(counters, 0);
    for (const auto& p : partial)
        if (!p.empty())
            for (std::uint64_t i = 0; i < counters; ++i) merged[i] += p[i];
    const auto [lo, hi] = std::minmax_element(merged.begin(), merged.end());
    result.min_count = *lo;
    result.max_count = *hi;
    if (*lo == *hi) result.lambda = *lo;
    return result;
}

/// C(k-i, t-i) divides lambda * C(v-i, t-i) for every 0 <= i <= t.
inline bool divisibility_check(unsigned t, std::size_t v, std::size_t k, const BigInt& lambda) {
    if (t == 0 || t > k || k > v) throw Error(ErrorKind::InvalidArgument, "divisibility check needs 0 < t <= k <= v");
    for (unsigned i = 0; i <= t; ++i) {
        const BigInt den = binomial(static_cast<long long>(k - i), t - i);
        const BigInt num = lambda * binomial(static_cast<long long>(v - i), t - i);
        if (!divides(den, num)) return false;
    }
    return true;
}

/// lambda = b * C(k, t) / C(v, t) for a t-(v, k, lambda) design with b blocks.
inline BigInt lambda_from_count(const BigInt& block_count, unsigned t, std::size_t v, std::size_t k) {
    if (block_count <= 0 || t == 0 || k == 0 || v == 0) throw Error(ErrorKind::InvalidArgument, "lambda_from_count needs positive inputs");
    return exact_div(block_count * binomial(static_cast<long long>(k), t), binomial(static_cast<long long>(v), t),
                     "not design-consistent: " + block_count.str() + " blocks of size " + std::to_string(k) + " cannot form a " +
                         std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + ",lambda) design");
}

/// Outcome of the Assmus-Mattson criterion for a dual pair (C, C^perp).
/// The criterion is applied with C^perp in the role of the design-holding code
/// of minimum distance d_perp: s counts the nonzero weights of C in (0, v - t],
/// and the hypothesis is s <= d_perp - t.
struct AMReport {
    unsigned t = 0;
    std::size_t d = 0;       // minimum distance of C
    std::size_t d_perp = 0;  // minimum distance of C^perp
    std::size_t s = 0;
    bool passes = false;
    std::vector<std::size_t> design_weights;       // in C
    std::vector<std::size_t> dual_design_weights;  // in C^perp
};

inline AMReport assmus_mattson_audit(const WeightDistribution& wd, const WeightDistribution& wd_dual, unsigned t) {
    const std::size_t v = wd.length();
    if (wd_dual.length() != v) throw Error(ErrorKind::InvalidArgument, "distributions have different lengths");
    const BigInt total = wd.total();
    const unsigned kappa = static_cast<unsigned>(boost::multiprecision::msb(total));
    if (total != pow2(kappa)) throw Error(ErrorKind::InvalidArgument, "first distribution does not sum to a power of two");
    if (macwilliams(wd, kappa) != wd_dual) throw Error(ErrorKind::InvalidArgument, "distributions are not a dual pair");

    AMReport r;
    r.t = t;
    const auto d = wd.minimum_weight();
    const auto dp = wd_dual.minimum_weight();
    if (!d || !dp) throw Error(ErrorKind::InvalidArgument, "a zero code has no minimum distance");
    r.d = *d;
    r.d_perp = *dp;
    if (t == 0) throw Error(ErrorKind::InvalidArgument, "t must be positive");
    if (t >= r.d_perp) throw Error(ErrorKind::InvalidArgument, "t too large: need t < " + std::to_string(r.d_perp));
    for (std::size_t i = 1; i + t <= v; ++i)
        if (wd[i] != 0) ++r.s;
    r.passes = r.s + t <= r.d_perp;
    if (r.passes) {
        for (std::size_t i = r.d; i <= v; ++i)
            if (wd[i] != 0) r.design_weights.push_back(i);
        for (std::size_t i = r.d_perp; i <= v; ++i)
            if (wd_dual[i] != 0) r.dual_design_weights.push_back(i);
    }
    return r;
}

/// Design file: "v=<int> k=<int>", then one block per line as ascending
/// space-separated indices, blocks in lexicographic order.
inline void write_design(std::ostream& out, const Design& d) {
    out << "v=" << d.points() << " k=" << d.block_size() << '\n';
    for (std::size_t b = 0; b < d.block_count(); ++b) {
        const auto blk = d.block(b);
        for (std::size_t i = 0; i < blk.indices.size(); ++i) out << (i ? " " : "") << blk.indices[i];
        out << '\n';
    }
}

inline Design read_design(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::Parse, "blocks file is empty");
    std::size_t v = 0, k = 0;
    {
        std::istringstream hdr(line);
        std::string a, b, extra;
        hdr >> a >> b;
        if (a.rfind("v=", 0) != 0 || b.rfind("k=", 0) != 0 || (hdr >> extra))
            throw Error(ErrorKind::Parse, "expected 'v=<int> k=<int>', got '" + line + "'");
        v = detail::parse_header_int(a, "v");
        k = detail::parse_header_int(b, "k");
    }
    std::vector<SupportSet> blocks;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        SupportSet s;
        long long x = 0;
        while (row >> x) {
            if (x < 0) throw Error(ErrorKind::Parse, "negative point index");
            s.indices.push_back(static_cast<std::uint32_t>(x));
        }
        if (!row.eof()) throw Error(ErrorKind::Parse, "bad block line '" + line + "'");
        if (s.size() != k) throw Error(ErrorKind::InvalidArgument, "not uniform: block of size " + std::to_string(s.size()) + ", header says " + std::to_string(k));
        blocks.push_back(std::move(s));
    }
    return Design::from_supports(v, blocks);
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_DESIGN_HPP
