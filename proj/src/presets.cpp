#include "orisfso/presets.hpp"

#include <stdexcept>

namespace orisfso::sweep {

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

static Scenario snr_base() {
    Scenario sc = default_scenario();
    sc.sweep = {Variable::SnrDb, 60.0, 140.0, 17};
    return sc;
}

std::vector<PresetRun> preset_runs(const std::string& name) {
    std::vector<PresetRun> runs;

    if (name == "fig3") {
        // one receiver, rate 1 bit/s/Hz, 1 mm waist expanded over the full
        // path; the three total path lengths are split evenly across the
        // two hops
        for (double dz : {400.0, 700.0, 1000.0}) {
            Scenario sc = snr_base();
            sc.single_receiver = true;
            sc.noma.R1 = 1.0;
            sc.methods = {RunMethod::Analytic, RunMethod::Asymptotic, RunMethod::Mc};
            sc.rx1.d_to = sc.rx1.d_or = dz / 2.0;
            sc.rx1.w_dz.reset();
            sc.rx1.w0 = 1e-3;
            runs.push_back({"dz" + std::to_string(int(dz)), sc});
        }
    } else if (name == "fig4") {
        for (double sr2 : {0.49, 1.0, 1.69}) {
            Scenario sc = snr_base();
            sc.methods = {RunMethod::Analytic, RunMethod::Mc, RunMethod::Oma};
            sc.rx1.rytov_sq_override = sr2;
            sc.rx2.rytov_sq_override = sr2;
            const char* tag = sr2 < 0.5 ? "sigmaR0p7" : sr2 < 1.5 ? "sigmaR1" : "sigmaR1p3";
            runs.push_back({tag, sc});
        }
    } else if (name == "fig5") {
        for (double snr : {90.0, 100.0, 110.0}) {
            Scenario sc = default_scenario();
            sc.sweep = {Variable::A1, 0.55, 0.95, 17};
            sc.noma.snr_db = snr;
            sc.methods = {RunMethod::Analytic, RunMethod::Mc};
            runs.push_back({"snr" + std::to_string(int(snr)), sc});
        }
    } else if (name == "fig6") {
        for (double cn2 : {5e-14, 1e-13}) {
            for (double a1 : {0.9, 0.8}) {
                Scenario sc = default_scenario();
                sc.sweep = {Variable::Dz2, 500.0, 1000.0, 11};
                sc.noma.snr_db = 80.0;
                sc.noma.a1 = a1;
                sc.noma.a2 = 1.0 - a1;
                sc.methods = {RunMethod::Analytic, RunMethod::Mc, RunMethod::Oma};
                sc.receivers = {outage::Receiver::Rx2};
                sc.rx1.Cn2 = sc.rx2.Cn2 = cn2;
                sc.rx2.w_dz.reset();  // width must follow the swept distance
                sc.rx2.w0 = 1e-3;
                const std::string tag = (cn2 < 7e-14 ? "cn5e14" : "cn1e13") +
                                        std::string(a1 > 0.85 ? "_a0p9" : "_a0p8");
                runs.push_back({tag, sc});
            }
        }
    } else if (name == "fig7") {
        for (double snr : {100.0, 110.0}) {
            Scenario sc = default_scenario();
            sc.sweep = {Variable::B1, 0.1, 0.9, 17};
            sc.noma.snr_db = snr;
            sc.methods = {RunMethod::Analytic, RunMethod::Mc};
            runs.push_back({"snr" + std::to_string(int(snr)), sc});
        }
    } else if (name == "fig8") {
        for (double sr2 : {0.64, 1.0, 1.69}) {
            Scenario sc = default_scenario();
            sc.sweep = {Variable::SwaySigma, 0.005, 0.08, 16};
            sc.noma.snr_db = 100.0;
            sc.methods = {RunMethod::Analytic, RunMethod::Mc, RunMethod::Oma};
            sc.rx1.rytov_sq_override = sr2;
            sc.rx2.rytov_sq_override = sr2;
            const char* tag = sr2 < 0.7 ? "sigmaR0p8" : sr2 < 1.5 ? "sigmaR1" : "sigmaR1p3";
            runs.push_back({tag, sc});
        }
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return runs;
}

}  // namespace orisfso::sweep
