#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "simon_mbqc.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SIMON_MBQC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: SIMON_MBQC_SEED is not an integer\n";
            std::exit(kExitUsage);
        }
    }
    return 1;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitDomain;
    }
    f << text;
    return kExitOk;
}

int status_to_exit(sm_status st) {
    switch (st) {
        case SM_OK: return kExitOk;
        case SM_ERR_BAD_ARG: return kExitUsage;
        default: return kExitDomain;
    }
}

struct Owned {
    char* ptr = nullptr;
    ~Owned() { sm_string_free(ptr); }
};

int run_report(sm_status (*fn)(const char*, char**), const json& cfg,
               const std::string& out_path) {
    Owned out;
    sm_status st = fn(cfg.dump().c_str(), &out.ptr);
    if (st != SM_OK) {
        std::cerr << "error: " << sm_last_error() << "\n";
        return status_to_exit(st);
    }
    return emit(out.ptr, out_path);
}

json noise_config(const std::string& kind, std::optional<double> param) {
    if (kind == "none") return nullptr;
    if (!param) {
        std::cerr << "error: --noise-param required with --noise-kind\n";
        std::exit(kExitUsage);
    }
    return json{{"kind", kind}, {"param", *param}};
}

std::string baseline_csv(const json& report) {
    std::string csv;
    if (report.at("mode") == "sp22") {
        csv = "strategy,queries\n";
        csv += "classical," + std::to_string(report.at("classical").at("value").get<double>()) + "\n";
        csv += "quantum," + std::to_string(report.at("quantum").at("expected_runs").get<double>()) + "\n";
    } else {
        csv = "n,queries,p_s,bound\n";
        csv += std::to_string(report.at("n").get<int>()) + "," +
               std::to_string(report.at("queries").get<int>()) + "," +
               std::to_string(report.at("p_s").get<double>()) + "," +
               std::to_string(report.at("bound").get<double>()) + "\n";
    }
    return csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measurement-based simulator for Simon's problem on cluster states"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a black-box instance and report y statistics");
    std::string bb;
    int flips = 0;
    std::uint64_t shots = 100000;
    std::uint64_t seed = default_seed();
    std::string noise_kind = "none";
    std::optional<double> noise_param;
    std::string out_path;
    run->add_option("--bb", bb, "black box id (s01, s10, s11, a8..o8)")->required();
    run->add_option("--flips", flips, "ancilla flip mask (0-3)");
    run->add_option("--shots", shots, "number of shots");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--noise-kind", noise_kind, "none | white | depolarizing");
    run->add_option("--noise-param", noise_param, "noise parameter");
    run->add_option("--out", out_path, "write report to file instead of stdout");

    // resource
    auto* resource = app.add_subcommand("resource", "Emit SP_nn resource graphs or counts");
    int n = 0;
    std::string emit_what = "counts";
    std::string resource_name;
    resource->add_option("--n", n, "SP_nn register size (n >= 2)");
    resource->add_option("--emit", emit_what, "counts | dot");
    resource->add_option("--resource", resource_name,
                         "named resource for dot export (linear5, sp22-6, sp22-8, spnn:<n>)");
    resource->add_option("--out", out_path, "output file");

    // tomo
    auto* tomo = app.add_subcommand("tomo", "Fidelity and witness tomography report");
    std::string tomo_resource = "linear5";
    int resamples = 200;
    tomo->add_option("--resource", tomo_resource, "resource id (linear5)");
    tomo->add_option("--shots", shots, "shots per measurement setting");
    tomo->add_option("--seed", seed, "master seed");
    tomo->add_option("--resamples", resamples, "Poisson resamples for error bars");
    tomo->add_option("--noise-kind", noise_kind, "none | white | depolarizing");
    tomo->add_option("--noise-param", noise_param, "noise parameter");
    tomo->add_option("--out", out_path, "output file");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "Classical vs quantum query baselines");
    bool monte_carlo = false;
    int queries = 1;
    std::uint64_t trials = 100000;
    std::string format = "json";
    baseline->add_flag("--monte-carlo", monte_carlo, "random-query success-bound Monte Carlo");
    baseline->add_option("--n", n, "register size for --monte-carlo");
    baseline->add_option("--queries", queries, "queries for --monte-carlo");
    baseline->add_option("--trials", trials, "Monte Carlo trials");
    baseline->add_option("--seed", seed, "master seed");
    baseline->add_option("--format", format, "json | csv");
    baseline->add_option("--out", out_path, "output file");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "List all catalogued black boxes");
    catalog->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (run->parsed()) {
        json cfg{{"bb", bb}, {"flips", flips}, {"shots", shots}, {"seed", seed}};
        cfg["noise"] = noise_config(noise_kind, noise_param);
        return run_report(&sm_run_json, cfg, out_path);
    }

    if (resource->parsed()) {
        Owned out;
        sm_status st;
        if (emit_what == "dot") {
            std::string name = resource_name.empty() ? ("spnn:" + std::to_string(n))
                                                     : resource_name;
            st = sm_resource_dot(name.c_str(), &out.ptr);
        } else if (emit_what == "counts") {
            if (n < 2) {
                std::cerr << "error: --n must be >= 2\n";
                return kExitUsage;
            }
            st = sm_resource_counts_json(n, &out.ptr);
        } else {
            std::cerr << "error: --emit must be counts or dot\n";
            return kExitUsage;
        }
        if (st != SM_OK) {
            std::cerr << "error: " << sm_last_error() << "\n";
            return status_to_exit(st);
        }
        if (emit_what == "counts") {
            // headline line first, full JSON after
            json rep = json::parse(out.ptr);
            return emit(rep.at("summary").get<std::string>() + "\n" + std::string(out.ptr),
                        out_path);
        }
        return emit(out.ptr, out_path);
    }

    if (tomo->parsed()) {
        json cfg{{"resource", tomo_resource},
                 {"shots", shots},
                 {"seed", seed},
                 {"resamples", resamples}};
        cfg["noise"] = noise_config(noise_kind, noise_param);
        return run_report(&sm_tomo_json, cfg, out_path);
    }

    if (baseline->parsed()) {
        json cfg;
        if (monte_carlo) {
            if (n < 2) {
                std::cerr << "error: --monte-carlo requires --n >= 2\n";
                return kExitUsage;
            }
            cfg = {{"monte_carlo", true}, {"n", n},     {"queries", queries},
                   {"trials", trials},    {"seed", seed}};
        } else {
            cfg = {{"trials", trials}, {"seed", seed}};
        }
        Owned out;
        sm_status st = sm_baseline_json(cfg.dump().c_str(), &out.ptr);
        if (st != SM_OK) {
            std::cerr << "error: " << sm_last_error() << "\n";
            return status_to_exit(st);
        }
        if (format == "csv") return emit(baseline_csv(json::parse(out.ptr)), out_path);
        if (format != "json") {
            std::cerr << "error: --format must be json or csv\n";
            return kExitUsage;
        }
        return emit(out.ptr, out_path);
    }

    if (catalog->parsed()) {
        Owned out;
        sm_status st = sm_catalog_json(&out.ptr);
        if (st != SM_OK) {
            std::cerr << "error: " << sm_last_error() << "\n";
            return status_to_exit(st);
        }
        return emit(out.ptr, out_path);
    }

    return kExitUsage;
}
