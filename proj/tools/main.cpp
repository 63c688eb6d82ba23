#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orisfso/presets.hpp"
#include "orisfso/sweep.hpp"

namespace sw = orisfso::sweep;

static std::string with_suffix(const std::string& out, const std::string& suffix) {
    if (suffix.empty()) return out;
    const auto dot = out.rfind('.');
    if (dot == std::string::npos) return out + "_" + suffix;
    return out.substr(0, dot) + "_" + suffix + out.substr(dot);
}

int main(int argc, char** argv) {
    CLI::App app{"outage sweeps for a two-user reflected free-space optical downlink"};
    app.require_subcommand(1);

    std::string scenario_path, out_path = "results.csv", preset;
    std::uint64_t seed = 0, trials = 0;
    int terms = 0;

    auto* run = app.add_subcommand("run", "execute a sweep and write CSV");
    run->add_option("scenario", scenario_path, "scenario JSON file");
    run->add_option("--out", out_path, "output CSV path (presets insert their run tag)");
    run->add_option("--preset", preset,
                    "canned experiment: " + [] {
                        std::string s;
                        for (const auto& n : sw::preset_names()) s += s.empty() ? n : ", " + n;
                        return s;
                    }());
    auto* seed_opt = run->add_option("--seed", seed, "Monte Carlo master seed");
    auto* trials_opt = run->add_option("--trials", trials, "Monte Carlo trials per point");
    auto* terms_opt = run->add_option("--terms", terms, "series terms for CDF evaluation");

    std::string validate_path;
    auto* val =
        app.add_subcommand("validate", "check a scenario and print derived parameters");
    val->add_option("scenario", validate_path, "scenario JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (val->parsed()) {
            const auto sc = sw::load_scenario(validate_path);
            const auto rep = sw::validate_scenario(sc);
            std::cout << sw::format_report(rep);
            return rep.ok() ? 0 : 2;
        }

        std::vector<sw::PresetRun> jobs;
        if (!preset.empty()) {
            if (!scenario_path.empty()) {
                std::cerr << "give either a scenario file or --preset, not both\n";
                return 2;
            }
            jobs = sw::preset_runs(preset);
        } else if (!scenario_path.empty()) {
            jobs.push_back({"", sw::load_scenario(scenario_path)});
        } else {
            std::cerr << "need a scenario file or --preset\n";
            return 2;
        }

        int failures = 0;
        for (auto& job : jobs) {
            if (seed_opt->count()) job.scenario.seed = seed;
            if (trials_opt->count()) job.scenario.mc_trials = trials;
            if (terms_opt->count()) job.scenario.series_terms = terms;
            const auto rr = sw::run_sweep(job.scenario);
            const std::string path = with_suffix(out_path, job.suffix);
            std::ofstream os(path);
            if (!os) {
                std::cerr << "cannot write " << path << "\n";
                return 2;
            }
            sw::write_csv(os, rr.rows);
            std::cerr << path << ": " << rr.rows.size() << " rows";
            if (rr.failures) std::cerr << " (" << rr.failures << " failed numerically)";
            std::cerr << "\n";
            failures += rr.failures;
        }
        return failures ? 3 : 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
