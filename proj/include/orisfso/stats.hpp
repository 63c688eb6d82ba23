#pragma once
#include <stdexcept>

#include "orisfso/channel.hpp"

namespace orisfso::stats {

// End-to-end channel gain h = h_l * h_s * h_g.  PDF/CDF are series of
// Mellin-Barnes terms; n_terms is the truncation order N.
struct E2EChannelDist {
    channel::ChannelParams params;
    int n_terms = 10;
    double tol = 1e-10;  // contour tail tolerance passed through to specfun
};

enum class AsymptoticBranch {
    TurbulenceLimited,  // min(alpha, beta) < c: irradiance tail dominates
    PointingLimited,    // c < min(alpha, beta): misalignment tail dominates
};

// Deep-fade expansion F(h) ~ coefficient * chi^exponent * (log factor),
// chi = alpha*beta*h/(A0*h_l).  The log factor is 1 in the turbulence-limited
// branch; in the pointing-limited branch it is a truncated even power series
// in log(chi) with log_series_terms terms.
struct AsymptoticCdf {
    AsymptoticBranch branch;
    double coefficient;
    double exponent;
    int log_series_terms;
    bool converges;
};

// Turbulence-limited branch requested with v >= c - min(alpha, beta): the
// closed-form coefficient's defining sum diverges.
struct NonConvergentError : std::domain_error {
    using std::domain_error::domain_error;
};

// min(alpha, beta) and c coincide (double pole): no pure power law exists.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

// Density of h.  Zero for h <= 0; clamped at 0 if contour noise drives a
// far-tail value slightly negative (warns below -1e-8).
double pdf(const E2EChannelDist& dist, double h);

// Distribution function of h, clamped to [0, 1].  Zero for h <= 0.
double cdf(const E2EChannelDist& dist, double h);

// Brute-force reference: numeric integration of the conditional misalignment
// CDF against the irradiance density.  Shares no code with the series path
// (no Mellin-Barnes evaluation anywhere); slow but trustworthy.
double oracle_cdf(const channel::ChannelParams& p, double h);

// Structure of the deep-fade expansion for this parameter set.
AsymptoticCdf asymptotic_form(const channel::ChannelParams& p,
                              int log_series_terms = 10);

// Value of the expansion at h; optionally reports the form used.
double cdf_asymptotic(const E2EChannelDist& dist, double h,
                      AsymptoticCdf* info = nullptr,
                      int log_series_terms = 10);

}  // namespace orisfso::stats
