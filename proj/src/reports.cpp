#include "simonsim/reports.hpp"

#include <cmath>
#include <cstdint>

#include <json.hpp>

#include "simonsim/graph_state.hpp"
#include "simonsim/mbqc.hpp"
#include "simonsim/noise.hpp"
#include "simonsim/simon.hpp"
#include "simonsim/spnn.hpp"
#include "simonsim/tomography.hpp"

namespace simonsim::reports {

namespace {

using nlohmann::json;

NoiseSpec parse_noise(const json& cfg) {
    if (!cfg.contains("noise") || cfg.at("noise").is_null()) return NoiseSpec::none();
    const json& n = cfg.at("noise");
    return NoiseSpec::from(n.at("kind").get<std::string>(), n.at("param").get<double>());
}

json noise_json(const NoiseSpec& spec) {
    if (spec.kind == NoiseSpec::Kind::None) return nullptr;
    return json{{"kind", spec.kind_name()}, {"param", spec.param}};
}

std::string flips_string(int flips, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
        if ((flips >> (n - 1 - i)) & 1) s[i] = '1';
    }
    return s;
}

// RNG streams per report section, all derived from the master seed so that
// sections cannot perturb each other.
enum Stream : std::uint64_t { kShots = 0, kRuns = 1, kTomo = 2, kResample = 3 };

}  // namespace

std::string run_report(const std::string& config_json) {
    const json cfg = json::parse(config_json);
    const std::string bb = cfg.at("bb").get<std::string>();
    const int flips = cfg.value("flips", 0);
    const std::uint64_t shots = cfg.at("shots").get<std::uint64_t>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const NoiseSpec noise = parse_noise(cfg);

    SimonInstance inst = bb_catalog(bb, flips);
    CanonicalResource res = canonical_resource(inst.pattern.resource);

    SampleSet samples;
    samples.n = static_cast<int>(inst.pattern.output_qubits.size());
    for (std::uint64_t i = 0; i < shots; ++i) {
        Rng rng = Rng::derive(seed, kShots + 16 * i);
        CanonicalResource shot_res{res.graph, res.state};
        apply_noise_trajectory(shot_res.state, noise, rng);
        samples.add(run_pattern(shot_res, inst.pattern, rng).y);
    }

    json counts = json::object();
    json probs = json::object();
    for (const auto& [y, c] : samples.counts) {
        counts[y] = c;
        probs[y] = static_cast<double>(c) / static_cast<double>(shots);
    }

    PeriodResult solved = classify_period(samples.samples, samples.n,
                                          3 * static_cast<std::size_t>(samples.n));

    json out;
    out["bb"] = inst.bb_id;
    out["period"] = inst.one_to_one() ? "one-to-one" : *inst.period;
    out["flips"] = flips_string(flips, 2);
    out["shots"] = shots;
    out["seed"] = seed;
    out["noise"] = noise_json(noise);
    out["counts"] = counts;
    out["probabilities"] = probs;
    out["solved_period"] = solved.str();
    if (inst.one_to_one() || noise.kind != NoiseSpec::Kind::None) {
        out["expected_runs_estimate"] = nullptr;
    } else {
        Rng rng = Rng::derive(seed, kRuns);
        out["expected_runs_estimate"] = expected_runs_to_nonzero(inst, 20000, rng);
    }
    return out.dump(2) + "\n";
}

std::string tomo_report(const std::string& config_json) {
    const json cfg = json::parse(config_json);
    const std::string resource = cfg.value("resource", std::string("linear5"));
    const std::uint64_t shots = cfg.at("shots").get<std::uint64_t>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const int resamples = cfg.value("resamples", 200);
    const NoiseSpec noise = parse_noise(cfg);

    const ResourceId id = ResourceId::from_name(resource);
    if (id.kind != ResourceId::Kind::LinearCluster5) {
        throw DomainError("tomography report requires the linear5 resource");
    }
    CanonicalResource res = canonical_resource(id);

    std::vector<MeasurementSetting> settings = linear5_settings();
    settings.push_back("ZXZXZ");  // second witness setting

    std::map<MeasurementSetting, SettingCounts> counts;
    std::uint64_t stream = kTomo;
    for (const MeasurementSetting& setting : settings) {
        Rng rng = Rng::derive(seed, 1000 + stream++);
        if (noise.kind == NoiseSpec::Kind::None) {
            counts[setting] = simulate_setting_counts(res.state, setting, shots, rng);
        } else {
            SettingCounts c;
            for (std::uint64_t s = 0; s < shots; ++s) {
                StateVector st = res.state;
                apply_noise_trajectory(st, noise, rng);
                for (const auto& [k, v] : simulate_setting_counts(st, setting, 1, rng)) {
                    c[k] += v;
                }
            }
            counts[setting] = c;
        }
    }

    Rng rng_f = Rng::derive(seed, kResample);
    Rng rng_w = Rng::derive(seed, kResample + 100);
    TomoEstimate fid = fidelity_from_counts(res.graph, counts, shots ? resamples : 0, rng_f);
    TomoEstimate wit = witness_from_counts(counts, shots ? resamples : 0, rng_w);

    json out;
    out["resource"] = resource;
    out["shots"] = shots;
    out["seed"] = seed;
    out["resamples"] = resamples;
    out["noise"] = noise_json(noise);
    out["settings"] = settings;
    out["degenerate"] = fid.degenerate || wit.degenerate || shots == 0;
    out["fidelity"] = {{"value", fid.value}, {"error", fid.error}};
    out["witness"] = {{"value", wit.value},
                      {"error", wit.error},
                      {"detects_gme", wit.value + wit.error < 0.0}};
    return out.dump(2) + "\n";
}

std::string baseline_report(const std::string& config_json) {
    const json cfg = json::parse(config_json);
    json out;
    if (cfg.value("monte_carlo", false)) {
        const int n = cfg.at("n").get<int>();
        const int queries = cfg.at("queries").get<int>();
        const std::uint64_t trials = cfg.value("trials", std::uint64_t{100000});
        const std::uint64_t seed = cfg.value("seed", std::uint64_t{1});
        Rng rng = Rng::derive(seed, kRuns);
        const double p_s = classical_success_bound(n, queries, trials, rng);
        out["mode"] = "monte-carlo";
        out["n"] = n;
        out["queries"] = queries;
        out["trials"] = trials;
        out["seed"] = seed;
        out["p_s"] = p_s;
        out["bound"] = 0.5 + std::pow(2.0, -n / 2.0);
        return out.dump(2) + "\n";
    }
    const std::uint64_t trials = cfg.value("trials", std::uint64_t{100000});
    const std::uint64_t seed = cfg.value("seed", std::uint64_t{1});
    Rational classical = classical_baseline_sp22();
    Rng rng = Rng::derive(seed, kRuns);
    SimonInstance inst = bb_catalog("s01", 0);
    out["mode"] = "sp22";
    out["classical"] = {{"exact", std::to_string(classical.num) + "/" +
                                      std::to_string(classical.den)},
                        {"value", classical.value()}};
    out["quantum"] = {{"expected_runs", expected_runs_to_nonzero(inst, trials, rng)},
                      {"trials", trials},
                      {"seed", seed}};
    return out.dump(2) + "\n";
}

std::string spnn_run_report(const std::string& config_json) {
    const json cfg = json::parse(config_json);
    const int n = cfg.at("n").get<int>();
    const std::uint64_t shots = cfg.at("shots").get<std::uint64_t>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();

    SpnnSelection sel = SpnnSelection::one_to_one(n);
    if (cfg.contains("period") && !cfg.at("period").is_null()) {
        const std::string p = cfg.at("period").get<std::string>();
        if (static_cast<int>(p.size()) != n) throw DomainError("period length mismatch");
        std::vector<int> bits;
        for (char c : p) bits.push_back(c == '1');
        sel.period = bits;
    }
    if (cfg.contains("flips")) {
        const std::string f = cfg.at("flips").get<std::string>();
        if (static_cast<int>(f.size()) != n) throw DomainError("flips length mismatch");
        for (int i = 0; i < n; ++i) sel.flips[i] = f[i] == '1';
    }

    SpnnResource r = build_spnn_resource(n);
    SampleSet samples;
    samples.n = n;
    {
        CanonicalResource res{r.graph, build_cluster(r.graph)};
        Pattern p = compile_selection(r, sel);
        for (std::uint64_t i = 0; i < shots; ++i) {
            Rng rng = Rng::derive(seed, kShots + 16 * i);
            samples.add(run_pattern(res, p, rng).y);
        }
    }
    json counts = json::object();
    json probs = json::object();
    for (const auto& [y, c] : samples.counts) {
        counts[y] = c;
        probs[y] = static_cast<double>(c) / static_cast<double>(shots);
    }
    PeriodResult solved = classify_period(samples.samples, n, 3 * static_cast<std::size_t>(n));
    json out;
    out["n"] = n;
    out["period"] = sel.period ? json(cfg.at("period").get<std::string>()) : json("one-to-one");
    out["shots"] = shots;
    out["seed"] = seed;
    out["counts"] = counts;
    out["probabilities"] = probs;
    out["solved_period"] = solved.str();
    return out.dump(2) + "\n";
}

std::string catalog_report() {
    json out = json::array();
    for (const std::string& id : all_bb_ids()) {
        SimonInstance inst = bb_catalog(id, 0);
        json tab = json::object();
        for (int x = 0; x < 4; ++x) tab[flips_string(x, 2)] = flips_string(inst.table[x], 2);
        out.push_back({{"bb", inst.bb_id},
                       {"period", inst.one_to_one() ? "one-to-one" : *inst.period},
                       {"resource", inst.pattern.resource.name()},
                       {"table", tab}});
    }
    return out.dump(2) + "\n";
}

std::string resource_counts(int n) {
    SpnnResource r = build_spnn_resource(n);
    json out;
    out["n"] = n;
    out["vertices"] = r.graph.num_vertices();
    out["edges"] = r.graph.edges().size();
    out["summary"] = std::to_string(r.graph.num_vertices()) + " qubits, " +
                     std::to_string(r.graph.edges().size()) + " edges";
    return out.dump(2) + "\n";
}

std::string resource_dot(const std::string& resource_name) {
    ResourceId id = ResourceId::from_name(resource_name);
    return to_dot(canonical_graph(id), "resource");
}

std::string pattern_json_for(const std::string& bb_id, int flips) {
    return pattern_to_json(bb_catalog(bb_id, flips).pattern) + "\n";
}

}  // namespace simonsim::reports
