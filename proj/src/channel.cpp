#include "orisfso/channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "orisfso/specfun.hpp"
#include "orisfso/warnings.hpp"

namespace orisfso::channel {

namespace {
constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("GeometryConfig: " + what);
}
}  // namespace

void validate(const GeometryConfig& g) {
    if (!(g.d_to > 0.0)) bad("d_to must be > 0");
    if (!(g.d_or > 0.0)) bad("d_or must be > 0");
    if (!(g.l_d > 0.0)) bad("l_d must be > 0");
    if (!(g.wavelength > 0.0)) bad("wavelength must be > 0");
    if (!(g.phi_p > 0.0 && g.phi_p < kPi)) bad("phi_p must lie in (0, pi)");
    if (!(g.phi_r > 0.0 && g.phi_r < kPi)) bad("phi_r must lie in (0, pi)");
    if (!(g.rho > 0.0 && g.rho <= 1.0)) bad("rho must lie in (0, 1]");
    if (!(g.sigma_s >= 0.0 && g.sigma_r >= 0.0 && g.sigma_p >= 0.0))
        bad("sway standard deviations must be >= 0");
    if (g.sigma_s == 0.0 && g.sigma_r == 0.0 && g.sigma_p == 0.0)
        bad("at least one sway standard deviation must be > 0");
    if (!g.w_dz && !g.w0) bad("either w_dz or w0 must be given");
    if (g.w_dz && !(*g.w_dz > 0.0)) bad("w_dz must be > 0");
    if (g.w0 && !(*g.w0 > 0.0)) bad("w0 must be > 0");
    if (!(g.Cn2 > 0.0)) bad("Cn2 must be > 0");
    if (g.A0_override && !(*g.A0_override > 0.0 && *g.A0_override <= 1.0))
        bad("A0 override must lie in (0, 1]");
    if (g.rytov_sq_override && !(*g.rytov_sq_override > 0.0))
        bad("rytov_sq override must be > 0");
    if (g.Cn2 < 1e-17 || g.Cn2 > 1e-13) {
        std::ostringstream os;
        os << "Cn2 = " << g.Cn2 << " is outside the typical [1e-17, 1e-13] range";
        emit_warning(os.str());
    }
}

double beam_width(double w0, double d, double wavelength) {
    if (!(w0 > 0.0) || !(d >= 0.0) || !(wavelength > 0.0))
        throw std::invalid_argument("beam_width: w0, wavelength > 0 and d >= 0 required");
    const double s = wavelength * d / (kPi * w0 * w0);
    return w0 * std::sqrt(1.0 + s * s);
}

double path_loss(const GeometryConfig& g) {
    return g.rho * std::pow(10.0, -g.sigma_atm * g.d_z() / 10.0);
}

PointingParams pointing_params(const GeometryConfig& g) {
    const double sp = std::sin(g.phi_p);
    if (sp == 0.0)
        throw std::invalid_argument("pointing_params: sin(phi_p) must be nonzero");
    const double w =
        g.w_dz ? *g.w_dz : beam_width(*g.w0, g.d_z(), g.wavelength);

    const double cr = std::cos(g.phi_r);
    const double s2 = sp * sp;
    PointingParams p{};
    p.w = w;
    p.sigma_u1_sq =
        (g.sigma_s * g.sigma_s + 4.0 * cr * cr * g.sigma_r * g.sigma_r +
         g.sigma_p * g.sigma_p) / s2;
    p.sigma_u2_sq = (g.sigma_s * g.sigma_s + g.sigma_p * g.sigma_p) / s2;
    const double Omega = p.sigma_u1_sq + p.sigma_u2_sq;
    p.q = std::sqrt(p.sigma_u2_sq / p.sigma_u1_sq);

    p.nu1 = (g.l_d / (2.0 * w)) * std::sqrt(kPi / 2.0);
    p.nu2 = p.nu1 * std::fabs(sp);
    auto t_of = [](double nu) {
        return std::sqrt(kPi) * std::erf(nu) / (2.0 * nu * std::exp(-nu * nu));
    };
    p.t1 = t_of(p.nu1);
    p.t2 = t_of(p.nu2) / s2;
    p.t = std::sqrt(p.t1 * p.t2);

    p.omega = (1.0 + p.q * p.q) * p.t * w * w / (4.0 * p.q * Omega);
    p.c = (1.0 + p.q * p.q) * p.omega / (2.0 * p.q);
    p.v = (1.0 - p.q * p.q) * p.omega / (2.0 * p.q);
    p.A0 = g.A0_override ? *g.A0_override : std::erf(p.nu1) * std::erf(p.nu2);
    return p;
}

TurbulenceParams turbulence_params(const GeometryConfig& g) {
    TurbulenceParams t{};
    if (g.rytov_sq_override) {
        t.rytov_sq = *g.rytov_sq_override;
    } else {
        const double k = 2.0 * kPi / g.wavelength;
        t.rytov_sq =
            1.23 * g.Cn2 * std::pow(k, 7.0 / 6.0) * std::pow(g.d_z(), 11.0 / 6.0);
    }
    const double s2 = t.rytov_sq;
    const double s125 = std::pow(s2, 6.0 / 5.0);  // sigma_R^{12/5}
    t.alpha = 1.0 / std::expm1(0.49 * s2 / std::pow(1.0 + 1.11 * s125, 7.0 / 6.0));
    t.beta = 1.0 / std::expm1(0.51 * s2 / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
    return t;
}

namespace {
void check_identity(const ChannelParams& p) {
    const double lhs = p.c * p.c - p.v * p.v;
    const double rhs = p.omega * p.omega;
    if (std::fabs(lhs - rhs) > 1e-12 * std::fabs(rhs))
        throw std::logic_error("ChannelParams: c^2 - v^2 != omega^2");
    if (!(p.c > std::fabs(p.v)))
        throw std::logic_error("ChannelParams: c > |v| violated");
    if (!(p.alpha > 0.0 && p.beta > 0.0))
        throw std::logic_error("ChannelParams: alpha, beta must be > 0");
}
}  // namespace

ChannelParams derive(const GeometryConfig& g) {
    validate(g);
    const PointingParams pp = pointing_params(g);
    const TurbulenceParams tp = turbulence_params(g);
    ChannelParams p{};
    p.h_l = path_loss(g);
    p.A0 = pp.A0;
    p.omega = pp.omega;
    p.q = pp.q;
    p.c = pp.c;
    p.v = pp.v;
    p.sigma_u1_sq = pp.sigma_u1_sq;
    p.sigma_u2_sq = pp.sigma_u2_sq;
    p.t1 = pp.t1;
    p.t2 = pp.t2;
    p.t = pp.t;
    p.nu1 = pp.nu1;
    p.nu2 = pp.nu2;
    p.alpha = tp.alpha;
    p.beta = tp.beta;
    p.rytov_sq = tp.rytov_sq;
    p.d_z = g.d_z();
    p.w = pp.w;
    check_identity(p);
    return p;
}

ChannelParams from_raw(double alpha, double beta, double q, double omega,
                       double A0, double h_l) {
    if (!(alpha > 0.0 && beta > 0.0)) throw std::invalid_argument("from_raw: alpha, beta > 0");
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("from_raw: q in (0, 1]");
    if (!(omega > 0.0)) throw std::invalid_argument("from_raw: omega > 0");
    if (!(A0 > 0.0 && A0 <= 1.0)) throw std::invalid_argument("from_raw: A0 in (0, 1]");
    if (!(h_l > 0.0 && h_l <= 1.0)) throw std::invalid_argument("from_raw: h_l in (0, 1]");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ChannelParams p{};
    p.h_l = h_l;
    p.A0 = A0;
    p.omega = omega;
    p.q = q;
    p.c = (1.0 + q * q) * omega / (2.0 * q);
    p.v = (1.0 - q * q) * omega / (2.0 * q);
    p.sigma_u1_sq = p.sigma_u2_sq = nan;
    p.t1 = p.t2 = p.t = p.nu1 = p.nu2 = nan;
    p.alpha = alpha;
    p.beta = beta;
    p.rytov_sq = nan;
    p.d_z = nan;
    p.w = nan;
    check_identity(p);
    return p;
}

double pdf_pointing(double h_g, const ChannelParams& p) {
    if (!(h_g > 0.0) || h_g > p.A0) return 0.0;
    // log-space: the I0 argument grows linearly in -ln(h_g) while the power
    // factor decays, so combine exponents before exponentiating
    const double u = std::log(p.A0 / h_g);  // >= 0
    const double log_f = std::log(p.omega / p.A0) - (p.c - 1.0) * u +
                         specfun::log_bessel_i0(std::fabs(p.v) * u);
    return std::exp(log_f);
}

double pdf_turbulence(double h_s, const ChannelParams& p) {
    if (!(h_s > 0.0)) return 0.0;
    const double a = p.alpha, b = p.beta;
    const double nu = std::fabs(a - b);
    const double x = 2.0 * std::sqrt(a * b * h_s);
    if (x < 1e-8 && nu > 0.1) {
        // K_nu(x) ~ Gamma(nu)/2 * (2/x)^nu here, and the direct product is
        // 0 * inf (the prefactor underflows while K overflows); take the
        // limit in log space instead
        const double m = std::min(a, b);
        return std::exp(std::lgamma(nu) - std::lgamma(a) - std::lgamma(b) +
                        m * std::log(a * b) + (m - 1.0) * std::log(h_s));
    }
    const double log_pre = std::log(2.0) + 0.5 * (a + b) * std::log(a * b) -
                           std::lgamma(a) - std::lgamma(b) +
                           (0.5 * (a + b) - 1.0) * std::log(h_s);
    return std::exp(log_pre) * specfun::bessel_k(a - b, x);
}

}  // namespace orisfso::channel
