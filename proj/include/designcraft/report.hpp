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

#ifndef DESIGNCRAFT_REPORT_HPP
#define DESIGNCRAFT_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bch.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"
#include "weight_enum.hpp"

namespace designcraft {

enum class CheckStatus { Match, Mismatch, MismatchKnown, SkippedBudget };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Match: return "MATCH";
        case CheckStatus::Mismatch: return "MISMATCH";
        case CheckStatus::MismatchKnown: return "MISMATCH-KNOWN";
        case CheckStatus::SkippedBudget: return "SKIPPED-budget";
    }
    return "?";
}

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string observed;
    /// where each side came from, "expected-source vs observed-source"
    std::string provenance;
    CheckStatus status = CheckStatus::Match;
};

struct ReportSummary {
    std::size_t match = 0, mismatch = 0, mismatch_known = 0, skipped = 0;
    std::size_t total() const { return match + mismatch + mismatch_known + skipped; }
};

enum class VerifyLevel { Formulas, Full };

inline std::string to_string(VerifyLevel l) { return l == VerifyLevel::Full ? "full" : "formulas"; }

struct VerificationReport {
    unsigned m = 0;
    VerifyLevel level = VerifyLevel::Formulas;
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;

    ReportSummary summary() const {
        ReportSummary s;
        for (const auto& c : checks) {
            switch (c.status) {
                case CheckStatus::Match: ++s.match; break;
                case CheckStatus::Mismatch: ++s.mismatch; break;
                case CheckStatus::MismatchKnown: ++s.mismatch_known; break;
                case CheckStatus::SkippedBudget: ++s.skipped; break;
            }
        }
        return s;
    }

    const CheckRecord* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    /// 1 when any check mismatched outside the documented known family.
    int exit_code() const { return summary().mismatch == 0 ? 0 : 1; }

    std::string text() const {
        std::ostringstream out;
        out << "designcraft paper verify m=" << m << " level=" << to_string(level) << '\n';
        for (const auto& n : notes) out << "# note: " << n << '\n';
        for (const auto& c : checks)
            out << '[' << to_string(c.status) << "] " << c.name << " expected=" << c.expected << " observed=" << c.observed << " (" << c.provenance << ")\n";
        const auto s = summary();
        out << "summary: total=" << s.total() << " match=" << s.match << " mismatch=" << s.mismatch << " mismatch_known=" << s.mismatch_known
            << " skipped_budget=" << s.skipped << '\n';
        return out.str();
    }

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["level"] = to_string(level);
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"provenance", c.provenance}, {"status", to_string(c.status)}});
        const auto s = summary();
        j["summary"] = {{"total", s.total()}, {"match", s.match}, {"mismatch", s.mismatch}, {"mismatch_known", s.mismatch_known}, {"skipped_budget", s.skipped}};
        j["notes"] = notes;
        return j;
    }
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Formulas;
    EnumerationOptions enumeration{};
    /// cap on blocks * C(k, t) counter increments per exhaustive design check, as log2
    unsigned design_work_log2 = 32;
};

namespace detail {

/// Short rendering of a distribution: full listing when small, otherwise a
/// fingerprint of the nonzero range, count and total.
inline std::string describe(const WeightDistribution& wd) {
    const auto sup = wd.support();
    if (sup.size() <= 12) return wd.to_string();
    std::ostringstream s;
    s << "{" << sup.size() << " nonzero weights in " << sup.front() << ".." << sup.back() << ", total=" << wd.total().str() << "}";
    return s.str();
}

/// First few weights where two distributions differ, rendered for each side.
inline std::pair<std::string, std::string> describe_difference(const WeightDistribution& a, const WeightDistribution& b) {
    if (a.length() != b.length()) return {"length " + std::to_string(a.length()), "length " + std::to_string(b.length())};
    std::string ea, eb;
    int shown = 0;
    for (std::size_t w = 0; w <= a.length() && shown < 4; ++w) {
        if (a[w] == b[w]) continue;
        if (shown++) {
            ea += ", ";
            eb += ", ";
        }
        ea += std::to_string(w) + ":" + a[w].str();
        eb += std::to_string(w) + ":" + b[w].str();
    }
    return {"{" + ea + "}", "{" + eb + "}"};
}

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    void add(std::string name, std::string expected, std::string observed, std::string provenance, bool ok, bool known = false) {
        const auto status = ok ? CheckStatus::Match : (known ? CheckStatus::MismatchKnown : CheckStatus::Mismatch);
        r_.checks.push_back({std::move(name), std::move(expected), std::move(observed), std::move(provenance), status});
    }

    void skip(std::string name, std::string expected, std::string reason, std::string provenance) {
        r_.checks.push_back({std::move(name), std::move(expected), "skipped: " + std::move(reason), std::move(provenance), CheckStatus::SkippedBudget});
    }

    void compare(const std::string& name, const WeightDistribution& expected, const WeightDistribution& observed, const std::string& provenance) {
        if (expected == observed) {
            const auto d = describe(expected);
            add(name, d, d, provenance, true);
        } else {
            auto [e, o] = describe_difference(expected, observed);
            add(name, e, o, provenance, false);
        }
    }

    void compare(const std::string& name, const BigInt& expected, const BigInt& observed, const std::string& provenance, bool known = false) {
        add(name, expected.str(), observed.str(), provenance, expected == observed, known && expected != observed);
    }

    // Runs fn and records a mismatch carrying the error text if it throws.
    void guarded(const std::string& name, const std::string& expected, const std::string& provenance, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Budget)
                skip(name, expected, e.what(), provenance);
            else
                add(name, expected, std::string("error: ") + e.what(), provenance, false);
        }
    }

private:
    VerificationReport& r_;
};

inline std::string code_params(std::size_t n, std::size_t k) { return "[" + std::to_string(n) + "," + std::to_string(k) + "]"; }

inline std::string am_summary(std::size_t s, std::size_t d, std::size_t d_perp, bool passes) {
    return "s=" + std::to_string(s) + " d=" + std::to_string(d) + " d_perp=" + std::to_string(d_perp) + (passes ? " passes" : " fails");
}

}  // namespace detail

/// Reproduces every construction, distribution, audit and design claim for
/// one odd m >= 5. The Formulas level evaluates closed forms only; Full also
/// enumerates every code within the enumeration budget.
inline VerificationReport verify_claims(unsigned m, const VerifyOptions& opts) {
    detail::require_odd_m(m);
    VerificationReport report;
    report.m = m;
    report.level = opts.level;
    report.notes.push_back("alpha is the class of x modulo the default primitive polynomial; M_i is the minimal polynomial of alpha^i");
    report.notes.push_back("enumeration budget 2^" + std::to_string(opts.enumeration.budget_log2) + " codewords; design verification budget 2^" +
                           std::to_string(opts.design_work_log2) + " counter increments");
    detail::ReportBuilder rb(report);
    const bool full = opts.level == VerifyLevel::Full;
    const auto& eopts = opts.enumeration;

    const FieldSpec field = field_new(m);
    const std::size_t n = (std::size_t{1} << m) - 1;
    const std::size_t len = n + 1;
    const auto t1 = table1_params(m);
    const std::size_t dim = 3 * m;

    // constructions
    std::optional<LinearCode> c_bch0, c_narrow;
    for (auto variant : {CmVariant::BchB0, CmVariant::DualNarrow7}) {
        const std::string name = "construction." + to_string(variant) + ".parameters";
        rb.guarded(name, detail::code_params(n, dim), "stated parameters vs construction", [&] {
            auto code = build_c_m(m, variant, field);
            rb.add(name, detail::code_params(n, dim), detail::code_params(code.length(), code.dimension()), "stated parameters vs construction",
                   code.length() == n && code.dimension() == dim);
            (variant == CmVariant::BchB0 ? c_bch0 : c_narrow).emplace(std::move(code));
        });
    }

    // five-weight distribution
    const auto table1 = table1_distribution(m);
    rb.compare("table1.total", pow2(3 * m), table1.total(), "2^(3m) vs sum of table frequencies");
    for (auto* code : {c_bch0 ? &*c_bch0 : nullptr, c_narrow ? &*c_narrow : nullptr}) {
        if (!full || code == nullptr) continue;
        const std::string name = std::string("table1.vs-enumeration.") + (code == &*c_bch0 ? "bch0" : "dual-narrow7");
        if (!within_budget(*code, eopts.budget_log2)) {
            rb.skip(name, detail::describe(table1), "2^" + std::to_string(code->dimension()) + " codewords", "table formula vs enumeration");
            continue;
        }
        rb.compare(name, table1, weight_distribution(*code, eopts), "table formula vs enumeration");
    }

    // dual
    const auto dual_cf = dual_closed_form(m);
    rb.compare("dual.closed-form.vs-macwilliams", macwilliams(table1, static_cast<unsigned>(dim)), dual_cf, "MacWilliams transform vs closed form");
    {
        std::string obs;
        bool ok = true;
        for (std::size_t k = 1; k <= 6; ++k) {
            obs += (k > 1 ? "," : "") + dual_cf[k].str();
            ok = ok && dual_cf[k] == 0;
        }
        rb.add("dual.zero-counts-weights-1-6", "0,0,0,0,0,0", obs, "minimum distance 7 vs closed form", ok);
        rb.add("dual.weight7-positive", ">0", dual_cf[7].str(), "minimum distance 7 vs closed form", dual_cf[7] > 0);
        rb.compare("dual.weight7.x-polynomial", dual_weight7_count(m), dual_cf[7], "quartic in x vs closed form");
    }
    std::optional<LinearCode> c_dual;
    if (full && c_bch0) {
        c_dual.emplace(dual(*c_bch0));
        rb.add("dual.parameters", detail::code_params(n, n - dim), detail::code_params(c_dual->length(), c_dual->dimension()), "stated parameters vs null space",
               c_dual->dimension() == n - dim);
        if (within_budget(*c_dual, eopts.budget_log2)) {
            const auto wd = weight_distribution(*c_dual, eopts);
            rb.compare("dual.vs-enumeration", dual_cf, wd, "closed form vs enumeration");
            rb.add("dual.minimum-distance", "7", std::to_string(wd.minimum_weight().value_or(0)), "stated value vs enumeration", wd.minimum_weight() == 7u);
        } else {
            rb.skip("dual.vs-enumeration", detail::describe(dual_cf), "2^" + std::to_string(c_dual->dimension()) + " codewords", "closed form vs enumeration");
            rb.skip("dual.minimum-distance", "7", "2^" + std::to_string(c_dual->dimension()) + " codewords", "stated value vs enumeration");
        }
    }

    // double dual
    const auto dd = double_dual_params(m);
    const auto dd_cf = double_dual_closed_form(m);
    rb.compare("double-dual.total", pow2(3 * m + 1), 2 + 2 * dd.u + 2 * dd.freq_v + dd.w, "2^(3m+1) vs 2+2u+2v+w");
    rb.add("double-dual.power-moments", "first and third moments hold", pless_check(dd_cf, m) ? "first and third moments hold" : "moment equation violated",
           "power moments vs closed form", pless_check(dd_cf, m));
    {
        bool sym = true;
        for (std::size_t i = 0; i <= len; ++i) sym = sym && dd_cf[i] == dd_cf[len - i];
        rb.add("double-dual.palindromic", "A_i = A_(2^m - i)", sym ? "A_i = A_(2^m - i)" : "asymmetric", "weight symmetry vs closed form", sym);
        std::set<std::size_t> expected_weights{0, len};
        for (auto w : t1.weights) {
            expected_weights.insert(w);
            expected_weights.insert(len - w);
        }
        const auto sup = dd_cf.support();
        const std::set<std::size_t> observed(sup.begin(), sup.end());
        auto render = [](const std::set<std::size_t>& s) {
            std::string out;
            for (auto w : s) out += (out.empty() ? "" : ",") + std::to_string(w);
            return "{" + out + "}";
        };
        rb.add("double-dual.weight-set", render(expected_weights), render(observed), "weights w, n+1-w, n+1 vs closed form", expected_weights == observed);
    }
    std::optional<LinearCode> c_dd;
    if (full && c_bch0) {
        c_dd.emplace(double_dual_generator(*c_bch0));
        rb.add("double-dual.parameters", detail::code_params(len, dim + 1), detail::code_params(c_dd->length(), c_dd->dimension()), "stated parameters vs generator",
               c_dd->dimension() == dim + 1);
        if (c_dual && c_dual->dimension() < len) {
            const auto other = dual(extend(*c_dual));
            rb.add("double-dual.construction-paths-agree", "same code", same_code(other, *c_dd) ? "same code" : "different codes",
                   "generator [1|1; G|0] vs dual(extend(dual(C)))", same_code(other, *c_dd));
        }
        if (within_budget(*c_dd, eopts.budget_log2)) {
            const auto wd = weight_distribution(*c_dd, eopts);
            rb.compare("double-dual.vs-enumeration", dd_cf, wd, "closed form vs enumeration");
            rb.add("double-dual.minimum-distance", std::to_string(t1.weights[0]), std::to_string(wd.minimum_weight().value_or(0)), "stated value vs enumeration",
                   wd.minimum_weight() == t1.weights[0]);
        } else {
            rb.skip("double-dual.vs-enumeration", detail::describe(dd_cf), "2^" + std::to_string(c_dd->dimension()) + " codewords", "closed form vs enumeration");
        }
    }

    // extended dual
    const auto ext_cf = extended_dual_closed_form(m);
    {
        bool odd_zero = true;
        for (std::size_t k = 1; k <= len; k += 2) odd_zero = odd_zero && ext_cf[k] == 0;
        rb.add("extended-dual.odd-weights-zero", "all zero", odd_zero ? "all zero" : "nonzero odd weight", "parity vs closed form", odd_zero);
        rb.add("extended-dual.minimum-weight", "8", std::to_string(ext_cf.minimum_weight().value_or(0)), "stated value vs closed form", ext_cf.minimum_weight() == 8u);
        rb.compare("extended-dual.closed-form.vs-macwilliams", macwilliams(dd_cf, static_cast<unsigned>(dim + 1)), ext_cf,
                   "MacWilliams of double-dual vs closed form");
    }
    std::optional<LinearCode> c_ext;
    if (full && c_dual) {
        c_ext.emplace(extend(*c_dual));
        if (within_budget(*c_ext, eopts.budget_log2)) {
            const auto wd = weight_distribution(*c_ext, eopts);
            rb.compare("extended-dual.vs-enumeration", ext_cf, wd, "closed form vs enumeration");
            rb.add("extended-dual.minimum-distance", "8", std::to_string(wd.minimum_weight().value_or(0)), "stated value vs enumeration", wd.minimum_weight() == 8u);
        } else {
            rb.skip("extended-dual.vs-enumeration", detail::describe(ext_cf), "2^" + std::to_string(c_ext->dimension()) + " codewords", "closed form vs enumeration");
        }
    }

    // Assmus-Mattson hypotheses
    {
        const auto am2 = assmus_mattson_audit(table1, dual_cf, 2);
        rb.add("assmus-mattson.t2", detail::am_summary(5, t1.weights[0], 7, true), detail::am_summary(am2.s, am2.d, am2.d_perp, am2.passes),
               "stated hypotheses vs audit of the five-weight pair", am2.s == 5 && am2.d == t1.weights[0] && am2.d_perp == 7 && am2.passes);
        const auto am3 = assmus_mattson_audit(dd_cf, ext_cf, 3);
        rb.add("assmus-mattson.t3", detail::am_summary(5, t1.weights[0], 8, true), detail::am_summary(am3.s, am3.d, am3.d_perp, am3.passes),
               "stated hypotheses vs audit of the extended pair", am3.s == 5 && am3.d == t1.weights[0] && am3.d_perp == 8 && am3.passes);
    }

    // designs
    struct FamilySource {
        DesignFamily family;
        const WeightDistribution* closed_form;
        const LinearCode* code;
    };
    const std::vector<FamilySource> sources = {
        {DesignFamily::Primal, &table1, c_bch0 ? &*c_bch0 : nullptr},
        {DesignFamily::Dual, &dual_cf, c_dual ? &*c_dual : nullptr},
        {DesignFamily::DoubleDual, &dd_cf, c_dd ? &*c_dd : nullptr},
        {DesignFamily::ExtendedDual, &ext_cf, c_ext ? &*c_ext : nullptr},
    };
    for (const auto& src : sources) {
        const unsigned t = design_strength(src.family);
        const std::size_t v = design_points(src.family, m);
        for (std::size_t k : tabulated_block_sizes(m, src.family)) {
            const std::string base = "design." + to_string(src.family) + ".k" + std::to_string(k) + ".";
            const std::string params = std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + ",lambda)";
            const BigInt count = (*src.closed_form)[k];
            const BigInt lam_formula = closed_form_lambda(m, src.family, k);
            BigInt lam_count = 0;
            rb.guarded(base + "lambda-formula", lam_formula.str(), "lambda formula vs closed-form count", [&] {
                lam_count = lambda_from_count(count, t, v, k);
                rb.compare(base + "lambda-formula", lam_formula, lam_count, "lambda formula vs closed-form count * C(k,t)/C(v,t)");
            });
            const bool div = divisibility_check(t, v, k, lam_formula);
            rb.add(base + "divisibility", "holds", div ? "holds" : "fails", "necessary condition on " + params, div);

            // the block-count formula printed with the low-weight examples
            std::optional<BigInt> enumerated;
            const bool low_weight = src.family == DesignFamily::Dual || src.family == DesignFamily::ExtendedDual;
            const bool known_family = src.family == DesignFamily::ExtendedDual && k == 8;

            if (full && src.code != nullptr) {
                const std::string ename = base + "exhaustive";
                const std::string expected = "lambda=" + lam_formula.str();
                const std::uint64_t counters = t_subset_count(v, t);
                const unsigned __int128 work = static_cast<unsigned __int128>(binomial_u64(k, t)) * static_cast<std::uint64_t>(count);
                std::optional<std::string> reason;
                if (!within_budget(*src.code, eopts.budget_log2))
                    reason = "2^" + std::to_string(src.code->dimension()) + " codewords";
                else if (counters > kMaxDesignCounters || work > (static_cast<unsigned __int128>(1) << opts.design_work_log2))
                    reason = "verification work above 2^" + std::to_string(opts.design_work_log2);
                if (reason) {
                    rb.skip(base + "blocks-vs-enumeration", count.str(), *reason, "closed-form count vs distinct supports");
                    rb.skip(ename, expected, *reason, "lambda formula vs exhaustive t-subset count");
                } else {
                    const Design design = supports_to_design(*src.code, k, eopts);
                    enumerated = BigInt(design.block_count());
                    rb.compare(base + "blocks-vs-enumeration", count, *enumerated, "closed-form count vs distinct supports");
                    const auto check = verify_t_design(design, t, eopts.threads);
                    const std::string observed = check.lambda ? "lambda=" + std::to_string(*check.lambda)
                                                              : "not a design (min=" + std::to_string(check.min_count) + ", max=" + std::to_string(check.max_count) + ")";
                    rb.add(ename, expected, observed, "lambda formula vs exhaustive t-subset count", check.lambda && BigInt(*check.lambda) == lam_formula);
                }
            }
            if (low_weight) {
                const BigInt formula = closed_form_block_count(m, src.family, k);
                const BigInt observed = enumerated ? *enumerated : count;
                rb.compare(base + "block-count-formula", formula, observed,
                           std::string("block-count formula vs ") + (enumerated ? "enumeration" : "closed form"), known_family);
            }
        }
    }
    return report;
}

}  // namespace designcraft

#endif  // DESIGNCRAFT_REPORT_HPP
