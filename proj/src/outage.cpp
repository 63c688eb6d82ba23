#include "orisfso/outage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orisfso::outage {

namespace {
[[noreturn]] void bad(const char* what) {
    throw std::invalid_argument(std::string("NomaConfig: ") + what);
}

double diversity(const channel::ChannelParams& p) {
    return 0.5 * std::min(p.c, std::min(p.alpha, p.beta));
}

// Threshold-to-gain mapping: outage iff gamma_bar_eff * h^2 < gamma_th,
// i.e. h < sqrt(gamma_th / gamma_bar_eff).
double gain_at(double gamma_th, double gamma_bar_eff) {
    return std::sqrt(gamma_th / gamma_bar_eff);
}

// Arguments of the weak user's max{.,.}: the SIC stage and the own-message
// stage, both divided by gamma_bar * B2.
struct Rx2Args {
    double sic, own;
};

Rx2Args rx2_args(const NomaConfig& cfg, double gbar) {
    const double gth1 = threshold(cfg.R1);
    const double gth2 = threshold(cfg.R2);
    Rx2Args a{};
    a.sic = gth1 / (cfg.a1 * cfg.B2 * gbar - cfg.a2 * cfg.B2 * gbar * gth1);
    a.own = gth2 / (cfg.a2 * cfg.B2 * gbar);
    return a;
}
}  // namespace

void validate(const NomaConfig& cfg) {
    if (!(cfg.a2 > 0.0 && cfg.a1 > cfg.a2)) bad("need a1 > a2 > 0");
    if (std::fabs(cfg.a1 + cfg.a2 - 1.0) > 1e-12) bad("need a1 + a2 = 1");
    if (!(cfg.B1 > 0.0 && cfg.B1 < 1.0)) bad("B1 must lie in (0, 1)");
    if (!(cfg.B2 > 0.0 && cfg.B2 < 1.0)) bad("B2 must lie in (0, 1)");
    if (cfg.B1 + cfg.B2 > 1.0 + 1e-12) bad("need B1 + B2 <= 1");
    if (!(cfg.R1 > 0.0 && cfg.R2 > 0.0)) bad("rates must be > 0");
    if (!std::isfinite(cfg.snr_db)) bad("snr_db must be finite");
}

double snr_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

OutageResult op_single(const stats::E2EChannelDist& dist, double snr_db, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("op_single: R must be > 0");
    OutageResult r{};
    r.method = Method::Analytic;
    r.p_out = stats::cdf(dist, gain_at(threshold(R), snr_linear(snr_db)));
    return r;
}

OutageResult op_rx1(const stats::E2EChannelDist& dist1, const NomaConfig& cfg) {
    validate(cfg);
    OutageResult r{};
    r.method = Method::Analytic;
    const double gth1 = threshold(cfg.R1);
    if (!(cfg.a1 / cfg.a2 > gth1)) {
        r.condition_violated = true;
        r.p_out = 1.0;
        return r;
    }
    const double gbar = snr_linear(cfg.snr_db);
    const double denom = cfg.a1 * cfg.B1 * gbar - cfg.a2 * cfg.B1 * gbar * gth1;
    r.p_out = stats::cdf(dist1, gain_at(gth1, denom));
    return r;
}

OutageResult op_rx2(const stats::E2EChannelDist& dist2, const NomaConfig& cfg) {
    validate(cfg);
    OutageResult r{};
    r.method = Method::Analytic;
    const double gth1 = threshold(cfg.R1);
    if (!(cfg.a1 / cfg.a2 > gth1)) {
        r.condition_violated = true;
        r.p_out = 1.0;
        return r;
    }
    const auto args = rx2_args(cfg, snr_linear(cfg.snr_db));
    r.active_arg = args.sic >= args.own ? 1 : 2;
    r.p_out = stats::cdf(dist2, std::sqrt(std::max(args.sic, args.own)));
    return r;
}

OutageResult op_oma(const stats::E2EChannelDist& dist_j, const NomaConfig& cfg,
                    Receiver which) {
    validate(cfg);
    if (which == Receiver::Single)
        throw std::invalid_argument("op_oma: pick Rx1 or Rx2");
    OutageResult r{};
    r.method = Method::Oma;
    const double R = which == Receiver::Rx1 ? cfg.R1 : cfg.R2;
    const double B = which == Receiver::Rx1 ? cfg.B1 : cfg.B2;
    const double gth = std::exp2(2.0 * R) - 1.0;  // half the airtime, twice the rate
    r.p_out = stats::cdf(dist_j, gain_at(gth, B * snr_linear(cfg.snr_db)));
    return r;
}

OutageResult op_asymptotic(const stats::E2EChannelDist& dist_j,
                           const NomaConfig& cfg, Receiver which) {
    validate(cfg);
    OutageResult r{};
    r.method = Method::Asymptotic;
    r.diversity_order = diversity(dist_j.params);
    const double gbar = snr_linear(cfg.snr_db);
    const double gth1 = threshold(cfg.R1);

    double h_arg = 0.0;
    switch (which) {
        case Receiver::Single:
            h_arg = gain_at(gth1, gbar);
            break;
        case Receiver::Rx1: {
            if (!(cfg.a1 / cfg.a2 > gth1)) {
                r.condition_violated = true;
                r.p_out = 1.0;
                return r;
            }
            const double denom =
                cfg.a1 * cfg.B1 * gbar - cfg.a2 * cfg.B1 * gbar * gth1;
            h_arg = std::sqrt(gth1 / denom);
            break;
        }
        case Receiver::Rx2: {
            if (!(cfg.a1 / cfg.a2 > gth1)) {
                r.condition_violated = true;
                r.p_out = 1.0;
                return r;
            }
            const auto args = rx2_args(cfg, gbar);
            r.active_arg = args.sic >= args.own ? 1 : 2;
            h_arg = std::sqrt(std::max(args.sic, args.own));
            break;
        }
    }
    r.p_out = std::min(stats::cdf_asymptotic(dist_j, h_arg), 1.0);
    return r;
}

}  // namespace orisfso::outage
