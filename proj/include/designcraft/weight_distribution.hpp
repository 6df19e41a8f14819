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

#ifndef DESIGNCRAFT_WEIGHT_DISTRIBUTION_HPP
#define DESIGNCRAFT_WEIGHT_DISTRIBUTION_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "big_int.hpp"
#include "error.hpp"

namespace designcraft {

/// Exact count of codewords at each weight 0..n.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t n) : counts_(n + 1, 0) {}
    explicit WeightDistribution(std::vector<BigInt> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) throw Error(ErrorKind::InvalidArgument, "weight distribution needs at least one entry");
    }

    std::size_t length() const { return counts_.empty() ? 0 : counts_.size() - 1; }

    const BigInt& operator[](std::size_t w) const { return counts_.at(w); }
    BigInt& operator[](std::size_t w) { return counts_.at(w); }

    /// Zero outside 0..n rather than throwing.
    BigInt count(long long w) const {
        if (w < 0 || static_cast<std::size_t>(w) >= counts_.size()) return 0;
        return counts_[static_cast<std::size_t>(w)];
    }

    const std::vector<BigInt>& counts() const { return counts_; }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts_) s += c;
        return s;
    }

    /// Weights with a nonzero count, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < counts_.size(); ++w)
            if (counts_[w] != 0) out.push_back(w);
        return out;
    }

    /// Smallest nonzero weight with a nonzero count.
    std::optional<std::size_t> minimum_weight() const {
        for (std::size_t w = 1; w < counts_.size(); ++w)
            if (counts_[w] != 0) return w;
        return std::nullopt;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

    /// "{0:1, 8:465, ...}" over nonzero entries.
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t w : support()) {
            if (s.size() > 1) s += ", ";
            s += std::to_string(w) + ":" + counts_[w].str();
        }
        return s + "}";
    }

private:
    std::vector<BigInt> counts_;
};

/// CSV with header "weight,count", one row per nonzero count, weights ascending.
inline void write_csv(std::ostream& out, const WeightDistribution& wd) {
    out << "weight,count\n";
    for (std::size_t w : wd.support()) out << w << ',' << wd[w].str() << '\n';
}

inline WeightDistribution read_csv(std::istream& in, std::size_t n) {
    std::string line;
    if (!std::getline(in, line) || line != "weight,count") throw Error(ErrorKind::Parse, "missing 'weight,count' header");
    WeightDistribution wd(n);
    long long last = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Parse, "bad CSV row '" + line + "'");
        std::size_t w = 0;
        try {
            w = std::stoull(line.substr(0, comma));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad weight in row '" + line + "'");
        }
        if (w > n) throw Error(ErrorKind::Parse, "weight " + std::to_string(w) + " exceeds length");
        if (static_cast<long long>(w) <= last) throw Error(ErrorKind::Parse, "weights are not strictly ascending");
        last = static_cast<long long>(w);
        const std::string digits = line.substr(comma + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::Parse, "bad count in row '" + line + "'");
        wd[w] = BigInt(digits);
    }
    return wd;
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_WEIGHT_DISTRIBUTION_HPP
