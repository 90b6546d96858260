// SPDX-License-Identifier: Apache-2.0
//
// Batch verification and exploration front end.
//
//   seq     sweep the coefficient routes and cross-check them
//   eval    evaluate a constant's certified enclosure
//   verify  check the special-value and formal identities
//   mu      certified CF prefix and irrationality-exponent estimate
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "digitsum/diophantine.hpp"
#include "digitsum/sequences.hpp"
#include "digitsum/series.hpp"

namespace {

using digitsum::series::Base;
using digitsum::series::Enclosure;

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

// Structured command report.  Deterministic for identical inputs; the
// optional timing line is the only exception and is off by default.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<Check> checks;
    std::optional<double> timing_ms;

    void input(const std::string& k, const std::string& v) {
        inputs.emplace_back(k, v);
    }
    void result(const std::string& k, const std::string& v) {
        results.emplace_back(k, v);
    }
    void check(const std::string& name, bool pass, const std::string& detail) {
        for (const Check& c : checks) {
            if (c.name == name) {
                throw std::logic_error("duplicate check name: " + name);
            }
        }
        checks.push_back(Check{name, pass, detail});
    }

    int exit_code() const {
        for (const Check& c : checks) {
            if (!c.pass) return 1;
        }
        return 0;
    }

    void print(bool lines) const {
        if (lines) {
            std::cout << "command=" << command << "\n";
            for (const auto& [k, v] : inputs) std::cout << "input " << k << "=" << v << "\n";
            for (const auto& [k, v] : results) std::cout << "result " << k << "=" << v << "\n";
            for (const Check& c : checks) {
                std::cout << "check " << c.name << " pass=" << (c.pass ? 1 : 0)
                          << " detail=" << c.detail << "\n";
            }
            if (timing_ms) std::cout << "timing_ms=" << *timing_ms << "\n";
        } else {
            std::cout << "command: " << command << "\n";
            if (!inputs.empty()) {
                std::cout << "inputs:\n";
                for (const auto& [k, v] : inputs) std::cout << "  " << k << " = " << v << "\n";
            }
            if (!results.empty()) {
                std::cout << "results:\n";
                for (const auto& [k, v] : results) std::cout << "  " << k << " = " << v << "\n";
            }
            if (!checks.empty()) {
                std::cout << "checks:\n";
                for (const Check& c : checks) {
                    std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                              << ": " << c.detail << "\n";
                }
            }
            if (timing_ms) {
                std::printf("timing: %.1f ms\n", *timing_ms);
            }
        }
    }
};

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

void add_enclosure_results(Report& report, const Enclosure& e) {
    using digitsum::series::decimal_string;
    using digitsum::series::to_string;
    report.result("target", e.target_name);
    report.result("lo", to_string(e.lo));
    report.result("hi", to_string(e.hi));
    report.result("width", to_string(e.width()));
    report.result("lo_decimal_50_nonauthoritative", decimal_string(e.lo));
    report.result("hi_decimal_50_nonauthoritative", decimal_string(e.hi));
}

constexpr unsigned long kSeqRangeCap = 10'000'000;  // oracle table memory guard
constexpr std::size_t kMaxTabulatedRows = 32;

Report run_seq(unsigned long range_end) {
    if (range_end < 1) {
        throw std::invalid_argument("seq: range end must be >= 1");
    }
    if (range_end > kSeqRangeCap) {
        throw std::invalid_argument("seq: range end exceeds the memory guard of " +
                                    std::to_string(kSeqRangeCap));
    }
    Report report;
    report.command = "seq";
    report.input("range_end", std::to_string(range_end));

    const auto oracle = digitsum::sequences::f_series_coefficients(range_end);
    bool all_equal = true;
    unsigned long first_mismatch = 0;
    for (unsigned long n = 1; n <= range_end; ++n) {
        const long fm = digitsum::sequences::f_multiplicative(n);
        const long fd = digitsum::sequences::f_difference(n);
        if (fm != fd || fm != oracle[n]) {
            all_equal = false;
            first_mismatch = n;
            break;
        }
        if (n <= kMaxTabulatedRows) {
            std::ostringstream row;
            row << "s2=" << digitsum::sequences::s2(n) << " f_mult=" << fm
                << " f_diff=" << fd << " f_oracle=" << oracle[n];
            report.result("n_" + std::to_string(n), row.str());
        }
    }
    if (range_end > kMaxTabulatedRows) {
        report.result("tabulated_rows",
                      std::to_string(kMaxTabulatedRows) + " of " +
                          std::to_string(range_end) +
                          " (checks cover the full range)");
    }
    report.check("triple_equality", all_equal,
                 all_equal ? "all three routes agree on [1, " +
                                 std::to_string(range_end) + "]"
                           : "first mismatch at n = " +
                                 std::to_string(first_mismatch));
    return report;
}

Report run_eval(long base, const std::string& which, unsigned terms) {
    Report report;
    report.command = "eval";
    report.input("base", std::to_string(base));
    report.input("which", which);
    report.input("terms", std::to_string(terms));

    Enclosure e;
    if (which == "F") {
        e = digitsum::series::eval_F(Base(base), terms);
    } else if (which == "S") {
        e = digitsum::series::eval_S(Base(base), terms);
    } else if (which == "fermat") {
        e = digitsum::series::fermat_reciprocal_sum(terms);
    } else {
        e = digitsum::series::liouville_partial(terms);
    }
    add_enclosure_results(report, e);
    report.check("enclosure_valid", e.lo <= e.hi, "lo <= hi");
    return report;
}

Report run_verify(long base, unsigned precision, std::size_t degree, bool corrupt) {
    Report report;
    report.command = "verify";
    report.input("base", std::to_string(base));
    report.input("precision_exponent", std::to_string(precision));
    report.input("degree", std::to_string(degree));
    if (corrupt) report.input("corrupt", "true");

    const auto rel = digitsum::series::verify_relation(Base(base), precision, corrupt);
    report.result("f_terms", std::to_string(rel.f_terms));
    report.result("s_terms", std::to_string(rel.s_terms));
    report.result("scaled_f_width", digitsum::series::to_string(rel.f_width));
    report.result("s_width", digitsum::series::to_string(rel.s_width));
    report.result("gap", digitsum::series::to_string(rel.gap));
    report.check("special_value_identity", rel.holds,
                 rel.holds ? "enclosures of S(1/b) and b/(b-1)*F(1/b) intersect"
                           : "enclosures disjoint, gap = " +
                                 digitsum::series::to_string(rel.gap));

    const bool formal = digitsum::series::formal_identity_check(degree);
    report.check("formal_identity", formal,
                 "coefficientwise to degree " + std::to_string(degree));
    return report;
}

struct MuBand {
    double lower;
    std::optional<double> upper;
};

void add_mu_results(Report& report, const digitsum::diophantine::ContinuedFraction& cf,
                    const digitsum::diophantine::MuEstimate& est, const MuBand& band) {
    namespace dio = digitsum::diophantine;
    report.result("certified_prefix", cf.to_string());
    const auto table = dio::convergents(cf);
    const bool abridged = table.size() > 40;
    for (std::size_t k = 0; k < table.size(); ++k) {
        if (abridged && k >= 5 && k + 5 < table.size()) {
            if (k == 5) report.result("convergents", "... (abridged) ...");
            continue;
        }
        report.result("convergent_" + std::to_string(k),
                      table[k].p.get_str() + "/" + table[k].q.get_str());
    }
    for (const auto& [k, r] : est.ratios) {
        report.result("ratio_" + std::to_string(k), fmt6(r));
    }
    report.result("mu_hat", fmt6(est.mu_hat));

    std::string band_text = "(" + fmt6(band.lower) + ", " +
                            (band.upper ? fmt6(*band.upper) : "inf") + ")";
    const bool in_band =
        est.mu_hat > band.lower && (!band.upper || est.mu_hat < *band.upper);
    report.check("mu_band", in_band, "mu_hat " + fmt6(est.mu_hat) +
                                         " against band " + band_text);
}

Report run_mu(long base, const std::string& which, std::size_t quotients,
              std::optional<std::size_t> window_start, unsigned liouville_depth) {
    namespace dio = digitsum::diophantine;
    Report report;
    report.command = "mu";
    report.input("which", which);
    report.input("quotients", std::to_string(quotients));

    if (which == "F" || which == "S") {
        report.input("base", std::to_string(base));
        const std::size_t ws = window_start.value_or(10);
        report.input("window_start", std::to_string(ws));
        dio::DepthPolicy policy;
        policy.min_quotients = quotients;
        policy.window_start = ws;
        try {
            const dio::ConstantMu r = dio::estimate_mu_for_constant(
                Base(base), which == "F" ? dio::Constant::F : dio::Constant::S,
                policy);
            report.result("depth_used", std::to_string(r.depth_used));
            add_mu_results(report, r.certified_prefix, r.estimate,
                           MuBand{2.0, 2.5});
        } catch (const std::runtime_error& e) {
            // distinct failure kind: certification ran out of depth
            report.check("certified_quotients", false, e.what());
        }
    } else if (which == "liouville") {
        report.input("depth", std::to_string(liouville_depth));
        const std::size_t ws = window_start.value_or(1);
        report.input("window_start", std::to_string(ws));
        const auto prefix = dio::certified_cf_prefix(
            digitsum::series::liouville_partial(liouville_depth));
        // the giant quotients sit at the end of the prefix, so use all of it
        add_mu_results(report, prefix, dio::estimate_mu(prefix, ws),
                       MuBand{5.0, std::nullopt});
    } else {  // golden: synthetic all-ones calibration CF, not enclosure-backed
        const std::size_t ws = window_start.value_or(5);
        report.input("window_start", std::to_string(ws));
        const auto cf = dio::ContinuedFraction::golden(quotients);
        add_mu_results(report, cf, dio::estimate_mu(cf, ws), MuBand{2.0, 2.25});
    }
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact digit-sum series and irrationality-exponent toolkit"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "lines"}))
        ->capture_default_str();
    bool timing = false;
    app.add_flag("--timing", timing, "Report wall-clock runtime");

    unsigned long range_end = 16;
    CLI::App* seq = app.add_subcommand("seq", "Sweep s2 and the three f routes");
    seq->add_option("--range-end", range_end, "Sweep [1, range_end]")
        ->capture_default_str();

    long base = 2;
    std::string which = "F";
    unsigned terms = 8;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a certified enclosure");
    eval->add_option("--base", base, "Base b of the evaluation point 1/b")
        ->capture_default_str();
    eval->add_option("--which", which, "Constant to evaluate")
        ->check(CLI::IsMember({"F", "S", "fermat", "liouville"}))
        ->capture_default_str();
    eval->add_option("--terms", terms, "Truncation depth (J for liouville)")
        ->capture_default_str();

    unsigned precision = 64;
    std::size_t degree = 4096;
    bool corrupt = false;
    CLI::App* verify = app.add_subcommand("verify", "Check the series identities");
    verify->add_option("--base", base, "Base b")->capture_default_str();
    verify->add_option("--precision", precision, "Precision exponent P: widths below b^-P")
        ->capture_default_str();
    verify->add_option("--degree", degree, "Formal identity degree")
        ->capture_default_str();
    verify->add_flag("--corrupt", corrupt)->group("");  // hidden negative control

    std::size_t quotients = 64;
    std::optional<std::size_t> window_start;
    unsigned liouville_depth = 6;
    std::string mu_which = "F";
    CLI::App* mu = app.add_subcommand("mu", "Certified CF prefix and mu estimate");
    mu->add_option("--base", base, "Base b (for F and S)")->capture_default_str();
    mu->add_option("--which", mu_which, "Constant or calibration target")
        ->check(CLI::IsMember({"F", "S", "liouville", "golden"}))
        ->capture_default_str();
    mu->add_option("--quotients", quotients, "Certified quotients required")
        ->capture_default_str();
    mu->add_option("--window-start", window_start,
                   "First convergent index of the estimation window "
                   "(default 10 for F/S, 1 for liouville, 5 for golden)");
    mu->add_option("--depth", liouville_depth, "Liouville truncation J")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        Report report;
        if (seq->parsed()) {
            report = run_seq(range_end);
        } else if (eval->parsed()) {
            report = run_eval(base, which, terms);
        } else if (verify->parsed()) {
            report = run_verify(base, precision, degree, corrupt);
        } else {
            report = run_mu(base, mu_which, quotients, window_start, liouville_depth);
        }
        if (timing) {
            report.timing_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        }
        report.print(format == "lines");
        return report.exit_code();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
