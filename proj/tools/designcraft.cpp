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

// Command-line front end: code construction, weight distributions, design
// extraction/verification and the end-to-end verification report.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "designcraft/designcraft.hpp"

namespace dc = designcraft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitBudget = 4;
constexpr int kExitNotDesign = 5;

int exit_code_for(dc::ErrorKind kind) {
    switch (kind) {
        case dc::ErrorKind::InvalidArgument:
        case dc::ErrorKind::Parse: return kExitUsage;
        case dc::ErrorKind::Construction: return kExitConstruction;
        case dc::ErrorKind::Budget: return kExitBudget;
        case dc::ErrorKind::Inconsistent: return kExitMismatch;
    }
    return kExitMismatch;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dc::Error(dc::ErrorKind::InvalidArgument, "cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw dc::Error(dc::ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
    return out;
}

dc::LinearCode load_code(const std::string& path) {
    auto in = open_in(path);
    return dc::read_code(in);
}

dc::WeightDistribution closed_form(const std::string& family, unsigned m) {
    if (family == "table1") return dc::table1_distribution(m);
    if (family == "dual") return dc::dual_closed_form(m);
    if (family == "double-dual") return dc::double_dual_closed_form(m);
    if (family == "extended-dual") return dc::extended_dual_closed_form(m);
    throw dc::Error(dc::ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

struct Flags {
    unsigned threads = 0;

    // code build
    std::optional<unsigned> m;
    std::string variant;
    std::optional<std::uint64_t> delta, offset;
    std::string out;

    // wdist
    std::string code;
    std::string method = "enum";
    std::string family;
    std::optional<unsigned> dim_dual;

    // designs
    std::optional<std::size_t> weight;
    std::string blocks;
    std::optional<long long> t;

    // verify claims
    std::string level = "formulas";
    std::string json;
    unsigned design_work = 32;
};

dc::EnumerationOptions enumeration_options(const Flags& f) {
    dc::EnumerationOptions opts;
    if (f.threads > 0) opts.threads = f.threads;
    return opts;
}

int cmd_code_build(const Flags& f) {
    if (!f.m) throw dc::Error(dc::ErrorKind::InvalidArgument, "--m is required");
    const bool generic = f.delta.has_value() || f.offset.has_value();
    if (generic == !f.variant.empty()) throw dc::Error(dc::ErrorKind::InvalidArgument, "give either --variant or --delta/--offset");
    const auto field = dc::field_new(*f.m);
    std::optional<dc::LinearCode> code;
    if (generic) {
        if (!f.delta || !f.offset) throw dc::Error(dc::ErrorKind::InvalidArgument, "--delta and --offset go together");
        code.emplace(dc::bch_code(dc::BchSpec::primitive(*f.m, *f.delta, *f.offset), field));
    } else {
        code.emplace(dc::build_c_m(*f.m, f.variant == "bch0" ? dc::CmVariant::BchB0 : dc::CmVariant::DualNarrow7, field));
    }
    if (!f.out.empty()) {
        auto out = open_out(f.out);
        dc::write_code(out, *code);
    }
    std::cout << '[' << code->length() << ',' << code->dimension() << "]\n";
    return kExitOk;
}

int cmd_wdist(const Flags& f) {
    const auto opts = enumeration_options(f);
    std::optional<dc::WeightDistribution> wd;
    if (f.method == "closed-form") {
        if (!f.m || f.family.empty()) throw dc::Error(dc::ErrorKind::InvalidArgument, "closed-form needs --m and --family");
        wd = closed_form(f.family, *f.m);
    } else {
        if (f.code.empty()) throw dc::Error(dc::ErrorKind::InvalidArgument, "--code is required for method " + f.method);
        const auto code = load_code(f.code);
        if (f.method == "enum") {
            if (!dc::within_budget(code, opts.budget_log2) && f.m && !f.family.empty()) {
                std::cerr << "enumeration over budget, using the closed form for " << f.family << '\n';
                wd = closed_form(f.family, *f.m);
                if (wd->length() != code.length()) throw dc::Error(dc::ErrorKind::InvalidArgument, "closed form length does not match the code");
            } else {
                wd = dc::weight_distribution(code, opts);
            }
        } else {
            // enumerate the dual and transform back
            if (!f.dim_dual) throw dc::Error(dc::ErrorKind::InvalidArgument, "method macwilliams needs --dim-dual (dimension of the dual code)");
            if (*f.dim_dual != code.length() - code.dimension())
                throw dc::Error(dc::ErrorKind::InvalidArgument, "--dim-dual " + std::to_string(*f.dim_dual) + " does not match n-k = " +
                                                                    std::to_string(code.length() - code.dimension()));
            const auto d = dc::dual(code);
            wd = dc::macwilliams(dc::weight_distribution(d, opts), *f.dim_dual);
        }
    }
    dc::write_csv(std::cout, *wd);
    return kExitOk;
}

int cmd_designs_extract(const Flags& f) {
    const auto code = load_code(f.code);
    const auto design = dc::supports_to_design(code, *f.weight, enumeration_options(f));
    auto out = open_out(f.out);
    dc::write_design(out, design);
    std::cout << "blocks=" << design.block_count() << '\n';
    return kExitOk;
}

int cmd_designs_verify(const Flags& f) {
    if (*f.t <= 0) throw dc::Error(dc::ErrorKind::InvalidArgument, "t must be positive");
    auto in = open_in(f.blocks);
    const auto design = dc::read_design(in);
    const unsigned t = static_cast<unsigned>(*f.t);
    const auto check = dc::verify_t_design(design, t, enumeration_options(f).threads);
    if (check.lambda) {
        std::cout << "lambda=" << *check.lambda << '\n';
        return kExitOk;
    }
    std::cout << "NOT A " << t << "-DESIGN (min=" << check.min_count << ", max=" << check.max_count << ")\n";
    return kExitNotDesign;
}

int cmd_verify_claims(const Flags& f) {
    dc::VerifyOptions opts;
    opts.level = f.level == "full" ? dc::VerifyLevel::Full : dc::VerifyLevel::Formulas;
    opts.enumeration = enumeration_options(f);
    opts.design_work_log2 = f.design_work;
    const auto report = dc::verify_claims(*f.m, opts);
    std::cout << report.text();
    if (!f.json.empty()) {
        auto out = open_out(f.json);
        out << report.json().dump(2) << '\n';
    }
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"designcraft: five-weight codes and the designs they hold"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--threads", f.threads, "worker cap (default: available parallelism)")->check(CLI::PositiveNumber);

    auto* code = app.add_subcommand("code", "code construction");
    code->require_subcommand(1);
    auto* build = code->add_subcommand("build", "build a BCH code and write it to a code file");
    build->add_option("--m", f.m, "field degree")->required();
    build->add_option("--variant", f.variant, "five-weight construction")->check(CLI::IsMember({"bch0", "dual-narrow7"}));
    build->add_option("--delta", f.delta, "designed distance of a generic primitive BCH code");
    build->add_option("--offset", f.offset, "first exponent of the generic BCH window");
    build->add_option("--out", f.out, "output code file");

    auto* wdist = app.add_subcommand("wdist", "weight distribution as CSV");
    wdist->add_option("--code", f.code, "code file");
    wdist->add_option("--method", f.method, "enum|macwilliams|closed-form")->check(CLI::IsMember({"enum", "macwilliams", "closed-form"}));
    wdist->add_option("--m", f.m, "field degree for closed forms");
    wdist->add_option("--family", f.family, "closed-form family")->check(CLI::IsMember({"table1", "dual", "extended-dual", "double-dual"}));
    wdist->add_option("--dim-dual", f.dim_dual, "dimension of the dual of --code (for the MacWilliams route)");

    auto* designs = app.add_subcommand("designs", "design extraction and verification");
    designs->require_subcommand(1);
    auto* extract = designs->add_subcommand("extract", "write the supports of one weight as a blocks file");
    extract->add_option("--code", f.code, "code file")->required();
    extract->add_option("--weight", f.weight, "codeword weight")->required();
    extract->add_option("--out", f.out, "output blocks file")->required();
    auto* verify = designs->add_subcommand("verify", "exhaustive t-design check");
    verify->add_option("--blocks", f.blocks, "blocks file")->required();
    verify->add_option("--t", f.t, "strength")->required();

    auto* paper = app.add_subcommand("paper", "end-to-end verification report");
    paper->require_subcommand(1);
    auto* pverify = paper->add_subcommand("verify", "reproduce every claim at one m");
    pverify->add_option("--m", f.m, "odd field degree, at least 5")->required();
    pverify->add_option("--level", f.level, "formulas|full")->check(CLI::IsMember({"formulas", "full"}));
    pverify->add_option("--json", f.json, "also write the report as JSON");
    pverify->add_option("--design-work", f.design_work, "log2 cap on counter increments per design check")->check(CLI::Range(1u, 62u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*build) return cmd_code_build(f);
        if (*wdist) return cmd_wdist(f);
        if (*extract) return cmd_designs_extract(f);
        if (*verify) return cmd_designs_verify(f);
        if (*pverify) return cmd_verify_claims(f);
    } catch (const dc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
