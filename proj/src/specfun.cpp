#include "orisfso/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace orisfso::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, 9 coefficients.  Relative accuracy ~1e-14 in
// the right half-plane; combined with the reflection formula below Re(z) = 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,     12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7,
};

cplx log_gamma_right(cplx z) {
    // valid for Re(z) >= 0.5
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z - 1.0 + double(i));
    const cplx t = z + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    // Uses principal logs; any 2*pi*i ambiguity cancels under exponentiation,
    // which is the only way contour integrands consume this branch.
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

double bessel_i0(double x) {
    x = std::fabs(x);
    if (x <= 60.0) {
        // ascending series; all terms positive, no cancellation
        const double t = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= t / (double(k) * double(k));
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return sum;
    }
    return std::exp(log_bessel_i0(x));
}

double log_bessel_i0(double x) {
    x = std::fabs(x);
    if (x <= 60.0) return std::log(bessel_i0(x));
    // asymptotic expansion: I0(x) = e^x / sqrt(2 pi x) * sum a_k / x^k,
    // a_k = ((2k-1)!!)^2 / (k! 8^k)
    double ak = 1.0, sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        const double odd = 2.0 * k - 1.0;
        ak *= odd * odd / (8.0 * k);
        sum += ak / std::pow(x, k);
    }
    return x - 0.5 * std::log(2.0 * kPi * x) + std::log(sum);
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    return boost::math::cyl_bessel_k(std::fabs(nu), x);
}

namespace {

struct ContourResult {
    double value = 0;
    double imag = 0;
    double abs_sum = 0;
    double endpoint_mag = 0;
};

// One trapezoid pass over the full (two-sided) truncated line for a single
// (k, family) integrand.  Everything in log space, exponentiated per node.
ContourResult contour_pass(const MellinIntegrand& mi, double z, const ContourSpec& cs) {
    const double lz = std::log(z);
    const int half = (cs.nodes - 1) / 2;
    const double dt = cs.half_height / half;
    const int p = 2 * mi.k + 1;
    cplx acc = 0.0;
    double abs_sum = 0.0;
    double end_mag = 0.0;
    for (int j = -half; j <= half; ++j) {
        const cplx s(cs.abscissa, j * dt);
        cplx lg;
        if (mi.family == Family::CdfFamily) {
            lg = log_gamma(mi.alpha - s) + log_gamma(mi.beta - s) + s * lz
                 - std::log(s) - double(p) * std::log(mi.c - s);
        } else {
            lg = log_gamma(mi.alpha - 1.0 - s) + log_gamma(mi.beta - 1.0 - s) + s * lz
                 - double(p) * std::log(mi.c - 1.0 - s);
        }
        cplx g = std::exp(lg);
        const double w = (j == -half || j == half) ? 0.5 : 1.0;
        acc += w * g;
        abs_sum += std::abs(g);
        if (j == half) end_mag = std::abs(g);
    }
    ContourResult r;
    r.value = acc.real() * dt / (2.0 * kPi);
    r.imag = acc.imag() * dt / (2.0 * kPi);
    r.abs_sum = abs_sum * dt / (2.0 * kPi);
    r.endpoint_mag = end_mag;
    return r;
}

double run_family(const MellinIntegrand& mi, double z, const MeijerOptions& opts) {
    if (!(mi.alpha > 0) || !(mi.beta > 0) || !(mi.c > 0))
        throw std::domain_error("meijer family: alpha, beta, c must be positive");
    if (!(z > 0)) throw std::domain_error("meijer family: z must be positive");
    ContourSpec cs = default_contour(mi, opts);
    for (;;) {
        ContourResult r = contour_pass(mi, z, cs);
        // geometric tail estimate: the integrand decays at least like
        // exp(-pi |Im s|) (product of two Gamma factors), so the truncated tail
        // is bounded by ~|g(end)| / pi
        const double tail = r.endpoint_mag / kPi;
        if (tail <= opts.tol) {
            const double sym_ref = std::max(std::fabs(r.value), 1e-6 * r.abs_sum);
            if (std::fabs(r.imag) > 1e-10 * sym_ref + 1e-300)
                throw ToleranceError("meijer family: conjugate-symmetry residual too large");
            return r.value;
        }
        if (cs.half_height >= opts.max_half_height)
            throw ToleranceError("meijer family: tail bound exceeds tolerance at max half-height");
        const double grow = 1.5;
        cs.half_height *= grow;
        cs.nodes = 2 * int(std::ceil((cs.nodes - 1) / 2 * grow)) + 1;
    }
}

}  // namespace

ContourSpec default_contour(const MellinIntegrand& mi, const MeijerOptions& opts) {
    const double m = std::min({mi.alpha, mi.beta, mi.c});
    ContourSpec cs;
    cs.half_height = opts.half_height;
    cs.nodes = opts.nodes;
    if (mi.family == Family::CdfFamily) {
        if (!(m > 0)) throw ContourError("cdf family: no separating contour (min(alpha,beta,c) <= 0)");
        cs.abscissa = 0.5 * m;  // midpoint of the valid strip (0, m)
    } else {
        cs.abscissa = m - 1.5;  // strip is unbounded on the left; stay 0.5 left of the bound
    }
    return cs;
}

double meijer_g_cdf_family(int k, double alpha, double beta, double c, double z,
                           const MeijerOptions& opts) {
    if (k < 0) throw std::domain_error("meijer_g_cdf_family: k must be nonnegative");
    return run_family({alpha, beta, c, k, Family::CdfFamily}, z, opts);
}

double meijer_g_pdf_family(int k, double alpha, double beta, double c, double z,
                           const MeijerOptions& opts) {
    if (k < 0) throw std::domain_error("meijer_g_pdf_family: k must be nonnegative");
    return run_family({alpha, beta, c, k, Family::PdfFamily}, z, opts);
}

std::vector<double> mellin_series_partial_sums(Family family, double alpha, double beta,
                                               double c, double v, double z, int n_terms,
                                               const MeijerOptions& opts) {
    if (!(alpha > 0) || !(beta > 0) || !(c > 0))
        throw std::domain_error("mellin series: alpha, beta, c must be positive");
    if (!(z > 0)) throw std::domain_error("mellin series: z must be positive");
    if (n_terms < 1) throw std::domain_error("mellin series: n_terms must be >= 1");
    const double va = std::fabs(v);
    const double m = std::min({alpha, beta, c});
    // node-wise convergence of the k-sum needs |c - s| > v on the line, i.e.
    // abscissa < c - v; combined with the separating-strip bound min(alpha,beta,c)
    const double bound = std::min(m, c - va);
    if (!(bound > 0)) throw ContourError("mellin series: no contour with |c - s| > v");
    double psi;
    if (family == Family::CdfFamily) {
        psi = 0.5 * bound;
    } else {
        psi = bound - 1.5;
    }
    const double v2q = 0.25 * va * va;

    double half_height = opts.half_height;
    int nodes = opts.nodes;
    const double lz = std::log(z);
    for (;;) {
        const int half = (nodes - 1) / 2;
        const double dt = half_height / half;
        std::vector<cplx> acc(n_terms, cplx(0.0));
        double abs_sum = 0.0, end_mag = 0.0;
        for (int j = -half; j <= half; ++j) {
            const cplx s(psi, j * dt);
            cplx base, r;
            if (family == Family::CdfFamily) {
                base = std::exp(log_gamma(alpha - s) + log_gamma(beta - s) + s * lz) / s;
                r = 1.0 / (c - s);
            } else {
                base = std::exp(log_gamma(alpha - 1.0 - s) + log_gamma(beta - 1.0 - s) + s * lz);
                r = 1.0 / (c - 1.0 - s);
            }
            const double w = (j == -half || j == half) ? 0.5 : 1.0;
            base *= w;
            const cplx r2 = r * r;
            cplx u = r;  // C(0,0) (v/2)^0 r^1
            for (int k = 0; k < n_terms; ++k) {
                if (k > 0)
                    u *= r2 * (v2q * (2.0 * k) * (2.0 * k - 1.0) / (double(k) * double(k)));
                acc[k] += base * u;
            }
            abs_sum += std::abs(base);
            if (j == half) end_mag = std::abs(base * r);
        }
        const double tail = end_mag / kPi;
        if (tail <= opts.tol) {
            const double scale = dt / (2.0 * kPi);
            std::vector<double> out(n_terms);
            cplx running = 0.0;
            for (int k = 0; k < n_terms; ++k) {
                running += acc[k];
                out[k] = running.real() * scale;
            }
            const double sym_ref =
                std::max(std::fabs(running.real()), 1e-6 * abs_sum) * scale;
            if (std::fabs(running.imag()) * scale > 1e-10 * sym_ref + 1e-300)
                throw ToleranceError("mellin series: conjugate-symmetry residual too large");
            return out;
        }
        if (half_height >= opts.max_half_height)
            throw ToleranceError("mellin series: tail bound exceeds tolerance at max half-height");
        half_height *= 1.5;
        nodes = 2 * int(std::ceil(half * 1.5)) + 1;
    }
}

}  // namespace orisfso::specfun
