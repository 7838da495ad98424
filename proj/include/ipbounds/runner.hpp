#pragma once

// Deterministic verification runner: per-case independent RNG streams,
// violation collection with boundary/hard classification, reproducible
// reports.

#include <chrono>

#include "ipbounds/registry.hpp"

namespace ipb::harness {

// '*' matches any substring.
inline bool glob_match(std::string_view pattern, std::string_view text) {
    if (pattern == "all") return true;
    std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

struct Violation {
    std::size_t trial = 0;
    std::string report_id;
    std::string kind;  // "bound" or "chain"
    bool boundary = false;
    double lhs = 0.0;
    std::vector<Term> rhs_chain;
};

struct TrialReport {
    std::string case_id;
    std::string op;
    std::string equation;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t evaluations = 0;
    std::size_t hypothesis_skips = 0;
    std::size_t boundary_count = 0;
    std::vector<Violation> violations;  // hard violations only
    double max_tightness = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    double wall_seconds = 0.0;

    bool pass() const { return violations.empty(); }
};

struct RunOptions {
    std::string suite = "all";
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    sampler::Config sampler;
    Tol tol;
    std::size_t max_violations_kept = 8;
};

inline void check_report(const ChainReport& rep, std::size_t trial, const Tol& tol,
                         TrialReport& out, std::size_t keep) {
    if (!rep.hypotheses_ok()) {
        ++out.hypothesis_skips;
        return;
    }
    ++out.evaluations;
    const Tol boundary_tol{10.0 * tol.abs, 10.0 * tol.rel};
    auto record = [&](const char* kind, bool hard) {
        if (hard && out.violations.size() < keep)
            out.violations.push_back({trial, rep.id, kind, false, rep.lhs, rep.rhs_chain});
        if (!hard) ++out.boundary_count;
    };
    if (!rep.holds(tol)) record("bound", !rep.holds(boundary_tol));
    if (!rep.chain_monotone(tol)) record("chain", !rep.chain_monotone(boundary_tol));
    if (!rep.rhs_chain.empty()) {
        const double rhs = rep.rhs_chain.front().value;
        out.min_gap = std::min(out.min_gap, rhs - rep.lhs);
        if (rhs > 0.0) out.max_tightness = std::max(out.max_tightness, rep.lhs / rhs);
    }
}

inline TrialReport run_case(const IneqCase& c, const RunOptions& opt) {
    TrialReport out;
    out.case_id = c.id;
    out.op = c.op;
    out.equation = c.equation;
    out.seed = opt.seed;
    out.trials = opt.trials;
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng = Rng::stream(opt.seed, c.id);
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        Reports rs = c.trial(rng, opt.sampler, opt.tol);
        for (const auto& rep : rs) check_report(rep, trial, opt.tol, out, opt.max_violations_kept);
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.min_gap == std::numeric_limits<double>::infinity()) out.min_gap = 0.0;
    return out;
}

inline std::vector<TrialReport> run_suite(const std::vector<IneqCase>& cases,
                                          const RunOptions& opt) {
    std::vector<TrialReport> out;
    for (const auto& c : cases)
        if (glob_match(opt.suite, c.id)) out.push_back(run_case(c, opt));
    return out;
}

inline std::size_t hard_violations(const std::vector<TrialReport>& reports) {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.violations.size();
    return n;
}

}  // namespace ipb::harness
