#pragma once
#include <cmath>
#include <optional>

#include "orisfso/stats.hpp"

namespace orisfso::outage {

enum class Method { Analytic, Asymptotic, MonteCarlo, Oma };
enum class Receiver { Rx1, Rx2, Single };

// Two-user power-domain NOMA downlink over two beam-split optical paths.
struct NomaConfig {
    double a1 = 0.9, a2 = 0.1;  // power allocations, a1 > a2, a1 + a2 = 1
    double B1 = 0.4, B2 = 0.6;  // beam-splitting factors
    double R1 = 2.0, R2 = 4.5;  // target rates [bit/s/Hz]
    double snr_db = 100.0;      // transmit SNR, 10*log10(gamma_bar)
};

struct OutageResult {
    double p_out = 0.0;
    Method method = Method::Analytic;
    // true when a1/a2 <= 2^R1 - 1: the strong user's message cannot be
    // separated at any SNR, so p_out is exactly 1 with no numerics involved
    bool condition_violated = false;
    std::optional<double> diversity_order;
    double std_err = 0.0;  // only meaningful for Monte Carlo results
    int active_arg = 0;    // op_rx2: which argument of max{.,.} decided (1 or 2)
};

// a1 > a2 > 0, a1 + a2 = 1; B1, B2 in (0,1) with B1 + B2 <= 1; R1, R2 > 0.
void validate(const NomaConfig& cfg);

double snr_linear(double snr_db);        // 10^(db/10)
inline double threshold(double R) { return std::exp2(R) - 1.0; }

// Point-to-point link at rate R: p_out = F_h(sqrt(gamma_th / gamma_bar)).
OutageResult op_single(const stats::E2EChannelDist& dist, double snr_db, double R);

// Strong user: decodes its own message against the weak user's interference.
OutageResult op_rx1(const stats::E2EChannelDist& dist1, const NomaConfig& cfg);

// Weak user: must first strip the strong user's message (SIC), then decode
// its own; outage if either step's SNR falls short.
OutageResult op_rx2(const stats::E2EChannelDist& dist2, const NomaConfig& cfg);

// Two-slot TDMA benchmark: receiver j gets beam power B_j*gamma_bar for half
// the time, so the per-slot threshold doubles in rate: 2^(2*R_j) - 1.
// Independent of a1/a2.  Receiver::Single is not meaningful here.
OutageResult op_oma(const stats::E2EChannelDist& dist_j, const NomaConfig& cfg,
                    Receiver which);

// Deep-fade closed form at the same CDF argument as the analytic op;
// attaches diversity_order = min(alpha, beta, c)/2.  For Receiver::Single the
// power-split fields are ignored (full budget, rate R1).
OutageResult op_asymptotic(const stats::E2EChannelDist& dist_j,
                           const NomaConfig& cfg, Receiver which);

}  // namespace orisfso::outage
