// ipb: verification CLI for the inequality registry.
//
//   ipb verify  --suite <glob|all> --trials N --seed S [--dim-min D] [--dim-max D]
//               [--scalar real|complex|both] [--tol-rel R] [--tol-abs A]
//               [--out report.json] [--csv report.csv]
//   ipb bound   --case <id> --input data.json
//   ipb witness --case <id>
//   ipb compare --study <id|all>
//   ipb list
//
// Exit codes: 0 on zero hard violations, 1 on violations, 2 on input errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ipbounds/json_io.hpp"

using namespace ipb;
using namespace ipb::harness;

namespace {

int cmd_verify(const RunOptions& opt, const std::string& out_path, const std::string& csv_path,
               bool with_selftest) {
    auto registry = build_registry();
    assert_registry_coverage(registry);
    if (with_selftest) {
        // deliberately corrupted rhs; exercises violation capture end to end
        registry.push_back({"selftest.corrupted", "selftest", "none",
                            [](Rng&, const sampler::Config&, const Tol&) {
                                ChainReport rep;
                                rep.id = "selftest.corrupted";
                                rep.lhs = 1.0;
                                rep.rhs_chain.push_back({"corrupted", 0.5});
                                return Reports{rep};
                            }});
    }
    auto reports = run_suite(registry, opt);
    if (reports.empty()) {
        std::cerr << "no cases match suite '" << opt.suite << "'\n";
        return 2;
    }

    json j;
    j["suite"] = opt.suite;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["tol_abs"] = opt.tol.abs;
    j["tol_rel"] = opt.tol.rel;
    j["dim_min"] = opt.sampler.dim_min;
    j["dim_max"] = opt.sampler.dim_max;
    j["cases"] = json::array();
    std::size_t hard = 0, boundary = 0;
    for (const auto& r : reports) {
        j["cases"].push_back(to_json(r));
        hard += r.violations.size();
        boundary += r.boundary_count;
    }
    j["hard_violations"] = hard;
    j["boundary_violations"] = boundary;
    j["status"] = hard == 0 ? "pass" : "fail";

    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        f << to_csv(reports);
    }
    std::cerr << reports.size() << " cases, " << hard << " hard violations, " << boundary
              << " boundary\n";
    return hard == 0 ? 0 : 1;
}

int cmd_bound(const std::string& case_id, const std::string& input_path) {
    std::ifstream f(input_path);
    if (!f) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
    }
    json in_json;
    try {
        f >> in_json;
        InputData data(in_json);
        Reports rs = evaluate_on_input(case_id, data);
        json out = json::array();
        bool ok = true;
        for (const auto& r : rs) {
            out.push_back(to_json(r));
            ok = ok && (!r.hypotheses_ok() || (r.holds() && r.chain_monotone()));
        }
        std::cout << out.dump(2) << "\n";
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_witness(const std::string& id) {
    for (const auto& w : build_witnesses()) {
        if (w.id != id && id != "all") continue;
        json out = json::array();
        for (const auto& r : w.evaluate()) out.push_back(to_json(r));
        std::cout << "witness " << w.id << " (" << w.equation << ")\n"
                  << out.dump(2) << "\n";
        if (id != "all") return 0;
    }
    if (id == "all") return 0;
    for (const auto& p : build_probes()) {
        if (p.id != id) continue;
        json out;
        out["probe"] = p.id;
        out["equation"] = p.equation;
        out["tightness"] = json::array();
        for (double eps : p.eps_grid)
            out["tightness"].push_back({{"eps", eps}, {"value", p.tightness(eps)}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cerr << "unknown witness '" << id << "'\n";
    return 2;
}

int cmd_compare(const std::string& id) {
    bool found = false, all_ok = true;
    for (const auto& st : build_studies()) {
        if (id != "all" && st.id != id) continue;
        found = true;
        std::cout << to_json(st).dump(2) << "\n";
        all_ok = all_ok && st.both_signs();
    }
    if (!found) {
        std::cerr << "unknown study '" << id << "'\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}

int cmd_list() {
    auto registry = build_registry();
    assert_registry_coverage(registry);
    json j = json::array();
    for (const auto& c : registry)
        j.push_back({{"case", c.id}, {"op", c.op}, {"equation", c.equation}});
    std::cout << j.dump(2) << "\n";
    std::cerr << registry.size() << " registered cases\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified bounds for inner-product-space inequality families"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string out_path, csv_path, scalar = "both";
    bool with_selftest = false;
    auto* verify = app.add_subcommand("verify", "run randomized verification sweeps");
    verify->add_option("--suite", opt.suite, "case id glob or 'all'");
    verify->add_option("--trials", opt.trials, "trials per case");
    verify->add_option("--seed", opt.seed, "rng seed");
    verify->add_option("--dim-min", opt.sampler.dim_min, "minimum dimension");
    verify->add_option("--dim-max", opt.sampler.dim_max, "maximum dimension");
    verify->add_option("--scalar", scalar, "real, complex or both");
    verify->add_option("--tol-rel", opt.tol.rel, "relative tolerance");
    verify->add_option("--tol-abs", opt.tol.abs, "absolute tolerance");
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--csv", csv_path, "write a CSV summary here");
    verify->add_flag("--with-selftest", with_selftest,
                     "append a deliberately failing case (violation-capture check)");

    std::string case_id, input_path, witness_id, study_id = "all";
    auto* bound = app.add_subcommand("bound", "evaluate one chain on user data");
    bound->add_option("--case", case_id, "case id")->required();
    bound->add_option("--input", input_path, "JSON input file")->required();

    auto* witness = app.add_subcommand("witness", "emit a sharpness/equality witness");
    witness->add_option("--case", witness_id, "witness id or 'all'")->required();

    auto* compare = app.add_subcommand("compare", "run an incomparability study");
    compare->add_option("--study", study_id, "study id or 'all'");

    app.add_subcommand("list", "dump the registry with equation tags");

    CLI11_PARSE(app, argc, argv);

    if (scalar == "real") {
        opt.sampler.allow_real = true;
        opt.sampler.allow_complex = false;
    } else if (scalar == "complex") {
        opt.sampler.allow_real = false;
        opt.sampler.allow_complex = true;
    } else if (scalar != "both") {
        std::cerr << "--scalar must be real, complex or both\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt, out_path, csv_path, with_selftest);
        if (bound->parsed()) return cmd_bound(case_id, input_path);
        if (witness->parsed()) return cmd_witness(witness_id);
        if (compare->parsed()) return cmd_compare(study_id);
        return cmd_list();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
