#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orisfso/channel.hpp"
#include "orisfso/outage.hpp"

namespace orisfso::sweep {

enum class Variable { SnrDb, A1, B1, Dz2, SwaySigma };
enum class RunMethod { Analytic, Asymptotic, Mc, Oma };

const char* variable_name(Variable v);
const char* method_name(RunMethod m);

struct SweepSpec {
    Variable variable = Variable::SnrDb;
    double from = 60.0;
    double to = 140.0;
    int steps = 17;  // equally spaced, endpoints included
};

// A full experiment description: two link geometries, the multiple-access
// configuration, one swept variable, and the evaluation methods to run at
// each point.  Defaults (see default_scenario) describe the baseline
// two-receiver layout used throughout the documentation.
struct Scenario {
    channel::GeometryConfig rx1;
    channel::GeometryConfig rx2;
    outage::NomaConfig noma;
    SweepSpec sweep;
    std::vector<RunMethod> methods{RunMethod::Analytic};
    // Emit rows for these receivers (ignored when single_receiver is set).
    std::vector<outage::Receiver> receivers{outage::Receiver::Rx1,
                                            outage::Receiver::Rx2};
    // Point-to-point mode: one link (rx1 geometry), full power budget,
    // rate R1.  Rows carry receiver name "single".
    bool single_receiver = false;
    std::uint64_t mc_trials = 1000000;
    std::uint64_t seed = 1;
    int series_terms = 10;
};

Scenario default_scenario();

// JSON object tree; missing keys keep their defaults, unknown keys are
// rejected (typo safety).  parse errors and bad fields throw
// std::invalid_argument with a dotted field path.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string scenario_to_json(const Scenario& sc);

struct ValidationIssue {
    std::string field;  // dotted path, e.g. "noma.a1"
    std::string message;
};

struct ReceiverReport {
    std::string name;
    channel::ChannelParams params;
    double lambda1 = 0.0, lambda2 = 0.0;  // misalignment mixture weights
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<ReceiverReport> receivers;  // filled for derivable geometries
    double gamma_th1 = 0.0, gamma_th2 = 0.0;
    bool ok() const { return issues.empty(); }
};

// Checks every scenario invariant without throwing; derived channel
// parameters are attached so a configuration can be sanity-checked by eye.
ValidationReport validate_scenario(const Scenario& sc);
std::string format_report(const ValidationReport& rep);

struct Row {
    std::string sweep_var;
    double value = 0.0;
    std::string receiver;  // "rx1", "rx2", "single"
    std::string method;    // "analytic", "asymptotic", "mc", "oma"
    double p_out = 0.0;    // NaN marks a numerical failure at this point
    double std_err = 0.0;
    bool condition_violated = false;
    std::optional<double> diversity_order;  // asymptotic rows only
};

struct RunResult {
    std::vector<Row> rows;
    int failures = 0;  // rows whose evaluation threw a numerical error
};

std::vector<double> grid(const SweepSpec& spec);

// Evaluates every sweep point x receiver x method combination.  Points are
// dispatched to a worker pool (size from ORISFSO_THREADS, else hardware
// concurrency); rows are buffered and returned in deterministic sweep order
// regardless of scheduling, and Monte Carlo rows get per-point seeds derived
// from scenario.seed, so results are reproducible.  Numerical failures flag
// the row (p_out = NaN) and the run continues.  Throws std::invalid_argument
// when validate_scenario reports issues.
RunResult run_sweep(const Scenario& sc);

// Fixed column set; numbers written in shortest exact (round-trip) form.
void write_csv(std::ostream& os, const std::vector<Row>& rows);
std::vector<Row> read_csv(std::istream& is);

}  // namespace orisfso::sweep
