#pragma once
#include <optional>

namespace orisfso::channel {

// Physical description of one Tx -> reflecting-surface -> Rx optical link.
// Angles in radians, every length in meters.
struct GeometryConfig {
    double d_to = 0.0;  // Tx to reflector
    double d_or = 0.0;  // reflector to Rx
    double phi_p = 0.0; // angle between reflected beam and photodetector plane
    double phi_r = 0.0; // angle between incident beam and reflector plane
    double l_d = 0.0;   // photodetector (lens) side length

    // Beam width at the receiver: give it directly, or give the waist and let
    // beam_width() expand it over the full path.
    std::optional<double> w_dz;
    std::optional<double> w0;

    double sigma_s = 0.0;  // Tx sway std dev
    double sigma_r = 0.0;  // reflector sway std dev
    double sigma_p = 0.0;  // Rx sway std dev

    double wavelength = 1550e-9;
    double Cn2 = 5e-14;       // refractive-index structure parameter [m^-2/3]
    double sigma_atm = 0.0;   // attenuation coefficient [m^-1]
    double rho = 1.0;         // reflection efficiency, (0, 1]

    // Optional overrides for quantities the closed-form defaults approximate.
    std::optional<double> A0_override;        // collected-power fraction at center
    std::optional<double> rytov_sq_override;  // scintillation strength

    double d_z() const { return d_to + d_or; }
};

// Distribution parameters of the three channel factors.
struct ChannelParams {
    double h_l;           // deterministic attenuation, (0, 1]
    double A0;            // peak collected-power fraction
    double omega, q, c, v;
    double sigma_u1_sq, sigma_u2_sq;
    double t1, t2, t;
    double nu1, nu2;
    double alpha, beta;   // turbulence shape parameters
    double rytov_sq;
    double d_z;
    double w;             // beam width at the receiver
};

struct PointingParams {
    double omega, q, c, v, A0;
    double sigma_u1_sq, sigma_u2_sq;
    double t1, t2, t, nu1, nu2, w;
};

struct TurbulenceParams {
    double alpha, beta, rytov_sq;
};

// Throws std::invalid_argument on out-of-range fields; emits a warning (not an
// error) when Cn2 falls outside the plausible [1e-17, 1e-13] window.
void validate(const GeometryConfig& g);

// Gaussian-beam width after propagating distance d from a waist w0.
double beam_width(double w0, double d, double wavelength);

// rho * 10^(-sigma_atm * d_z / 10)
double path_loss(const GeometryConfig& g);

PointingParams pointing_params(const GeometryConfig& g);
TurbulenceParams turbulence_params(const GeometryConfig& g);

// Full derivation; runs validate() first.
ChannelParams derive(const GeometryConfig& g);

// Build ChannelParams directly from distribution-level inputs (synthetic
// scenarios, tests).  Fields with no physical counterpart are set to NaN.
ChannelParams from_raw(double alpha, double beta, double q, double omega,
                       double A0, double h_l);

// Misalignment-gain density on (0, A0]; zero outside.
double pdf_pointing(double h_g, const ChannelParams& p);

// Gamma-Gamma irradiance density on (0, inf); zero for h_s <= 0.
double pdf_turbulence(double h_s, const ChannelParams& p);

}  // namespace orisfso::channel
