#include "orisfso/stats.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>
#include <vector>

#include "orisfso/specfun.hpp"
#include "orisfso/warnings.hpp"

namespace orisfso::stats {

namespace {

using channel::ChannelParams;

double chi_of(const ChannelParams& p, double h) {
    return p.alpha * p.beta * h / (p.A0 * p.h_l);
}

// truncated series of contour terms, with the N vs N-2 self-check
double series_value(const E2EChannelDist& dist, specfun::Family family, double z) {
    specfun::MeijerOptions opt;
    opt.tol = dist.tol;
    const auto& p = dist.params;
    auto sums = specfun::mellin_series_partial_sums(
        family, p.alpha, p.beta, p.c, std::fabs(p.v), z, dist.n_terms, opt);
    const double last = sums.back();
    if (dist.n_terms >= 3) {
        const double prev = sums[sums.size() - 3];
        if (std::fabs(last - prev) > 1e-6 * std::fabs(last)) {
            std::ostringstream os;
            os << "series truncation at N = " << dist.n_terms
               << " not settled: |S_N - S_{N-2}|/|S_N| = "
               << std::fabs(last - prev) / std::fabs(last) << " at z = " << z;
            emit_warning(os.str());
        }
    }
    return last;
}

}  // namespace

double pdf(const E2EChannelDist& dist, double h) {
    if (!(h > 0.0)) return 0.0;
    const auto& p = dist.params;
    const double z = chi_of(p, h);
    const double sum = series_value(dist, specfun::Family::PdfFamily, z);
    const double pre = p.omega * p.alpha * p.beta /
                       (p.h_l * p.A0 * std::tgamma(p.alpha) * std::tgamma(p.beta));
    double f = pre * sum;
    if (f < 0.0) {
        if (f < -1e-8) {
            std::ostringstream os;
            os << "pdf clamped from " << f << " at h = " << h;
            emit_warning(os.str());
        }
        f = 0.0;
    }
    return f;
}

double cdf(const E2EChannelDist& dist, double h) {
    if (!(h > 0.0)) return 0.0;
    const auto& p = dist.params;
    const double z = chi_of(p, h);
    const double sum = series_value(dist, specfun::Family::CdfFamily, z);
    const double pre = p.omega / (std::tgamma(p.alpha) * std::tgamma(p.beta));
    double F = pre * sum;
    if (F < 0.0) {
        if (F < -1e-8) {
            std::ostringstream os;
            os << "cdf clamped from " << F << " at h = " << h;
            emit_warning(os.str());
        }
        F = 0.0;
    }
    return F < 1.0 ? F : 1.0;
}

namespace {

// misalignment-gain CDF by quadrature in u = ln(A0/g) space:
// F(g0) = omega * Int_{u0}^{inf} exp(-c u) I0(|v| u) du
double pointing_cdf_by_quadrature(const ChannelParams& p, double g0) {
    if (!(g0 > 0.0)) return 0.0;
    if (g0 >= p.A0) return 1.0;
    const double u0 = std::log(p.A0 / g0);
    const double decay = p.c - std::fabs(p.v);  // integrand ~ exp(-decay*u)
    const double span = 60.0 / decay;
    auto f = [&](double u) {
        const double e = -p.c * u + specfun::log_bessel_i0(std::fabs(p.v) * u);
        return e < -745.0 ? 0.0 : std::exp(e);
    };
    const double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, u0, u0 + span, 12, 1e-12);
    return p.omega * val;
}

}  // namespace

double oracle_cdf(const ChannelParams& p, double h) {
    if (!(h > 0.0)) return 0.0;
    const double x_lo = h / (p.A0 * p.h_l);  // below: conditional CDF is 1
    using boost::math::quadrature::gauss_kronrod;

    double head = 0.0;
    if (x_lo > 0.0) {
        // irradiance mass on (0, x_lo]; endpoint density can be singular
        boost::math::quadrature::tanh_sinh<double> ts;
        head = ts.integrate(
            [&](double x) { return channel::pdf_turbulence(x, p); }, 0.0, x_lo,
            1e-10);
    }
    const double x_hi =
        x_lo + 900.0 / (p.alpha * p.beta) + 10.0;  // irradiance tail ~ e^{-2 sqrt(ab x)}
    const double tail = gauss_kronrod<double, 31>::integrate(
        [&](double x) {
            return channel::pdf_turbulence(x, p) *
                   pointing_cdf_by_quadrature(p, h / (p.h_l * x));
        },
        x_lo, x_hi, 14, 1e-10);
    double F = head + tail;
    if (F < 0.0) F = 0.0;
    return F < 1.0 ? F : 1.0;
}

AsymptoticCdf asymptotic_form(const ChannelParams& p, int log_series_terms) {
    const double m = std::min(p.alpha, p.beta);
    const double M = std::max(p.alpha, p.beta);
    const double av = std::fabs(p.v);
    if (std::fabs(m - p.c) < 1e-6)
        throw DegenerateError(
            "asymptotic_form: min(alpha, beta) and c coincide; no pure power law");

    AsymptoticCdf out{};
    out.log_series_terms = log_series_terms;
    if (m < p.c) {
        out.branch = AsymptoticBranch::TurbulenceLimited;
        out.exponent = m;
        out.converges = av < p.c - m;
        if (!out.converges)
            throw NonConvergentError(
                "asymptotic_form: coefficient sum diverges (|v| >= c - min(alpha, beta))");
        double Mm = M - m;
        if (std::fabs(Mm - std::round(Mm)) < 1e-9) {
            // Gamma(M - m) pole (or near-pole) when the shape gap is an
            // integer; nudge the larger shape off the lattice
            emit_warning("asymptotic_form: alpha - beta within 1e-9 of an integer; "
                         "perturbing by 1e-6 for the coefficient");
            Mm += 1e-6;
        }
        const double gap = p.c - m;
        out.coefficient = p.omega * std::tgamma(Mm) /
                          (std::sqrt(gap * gap - av * av) * std::tgamma(m + 1.0) *
                           std::tgamma(M));
    } else {
        out.branch = AsymptoticBranch::PointingLimited;
        out.exponent = p.c;
        out.converges = true;  // entire series in log(chi); truncation is heuristic
        out.coefficient = p.omega * std::tgamma(p.alpha - p.c) *
                          std::tgamma(p.beta - p.c) /
                          (p.c * std::tgamma(p.alpha) * std::tgamma(p.beta));
    }
    return out;
}

double cdf_asymptotic(const E2EChannelDist& dist, double h, AsymptoticCdf* info,
                      int log_series_terms) {
    if (!(h > 0.0))
        throw std::domain_error("cdf_asymptotic: h must be > 0");
    const auto& p = dist.params;
    AsymptoticCdf form = asymptotic_form(p, log_series_terms);
    if (info) *info = form;
    const double z = chi_of(p, h);
    double value = form.coefficient * std::pow(z, form.exponent);
    if (form.branch == AsymptoticBranch::PointingLimited) {
        const double x = 0.5 * std::fabs(p.v) * std::log(z);  // even powers only
        double term = 1.0, series = 1.0, last_ratio = 0.0;
        for (int k = 1; k < log_series_terms; ++k) {
            last_ratio = (x * x) / (double(k) * double(k));
            term *= last_ratio;
            series += term;
        }
        if (log_series_terms > 1 && last_ratio > 0.1) {
            std::ostringstream os;
            os << "cdf_asymptotic: log-series tail ratio " << last_ratio
               << " at cutoff " << log_series_terms
               << "; truncated value may be off";
            emit_warning(os.str());
        }
        value *= series;
    }
    return value;
}

}  // namespace orisfso::stats
