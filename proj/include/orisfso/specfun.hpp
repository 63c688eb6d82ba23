#pragma once
// Special-function kernel: complex log-Gamma, modified Bessel I0 / K_nu, and the
// two Meijer-G families used by the end-to-end channel statistics, evaluated as
// reduced Mellin-Barnes integrals on a vertical contour.

#include <complex>
#include <stdexcept>
#include <vector>

namespace orisfso::specfun {

using cplx = std::complex<double>;

// Raised when the truncated-contour tail bound cannot be pushed below the
// requested tolerance within the permitted half-height.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when no vertical line separates the pole families of the integrand.
struct ContourError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Family { PdfFamily, CdfFamily };

struct MellinIntegrand {
    double alpha = 0;
    double beta = 0;
    double c = 0;
    int k = 0;
    Family family = Family::CdfFamily;
};

// Vertical-line quadrature layout.  abscissa = Re(s); the line is truncated at
// Im(s) = +/- half_height and sampled with `nodes` equispaced points (trapezoid
// rule, exponentially convergent since the integrand is analytic in a strip and
// decays like exp(-pi |Im s|)).
struct ContourSpec {
    double abscissa = 0;
    double half_height = 60.0;
    int nodes = 2001;
};

struct MeijerOptions {
    double tol = 1e-10;       // absolute tolerance on the contour integral
    double half_height = 60.0;
    int nodes = 2001;
    double max_half_height = 240.0;  // growth limit before ToleranceError
};

// Principal-branch log-Gamma, continuous in the right half-plane.
// Throws std::domain_error at nonpositive-integer real z (poles of Gamma).
cplx log_gamma(cplx z);

// Modified Bessel function of the first kind, order zero.  Relative error
// below 1e-13 over the tested range; overflows to +inf near x ~ 713.
double bessel_i0(double x);

// log(I0(x)) without intermediate overflow; valid for any finite x.
double log_bessel_i0(double x);

// Modified Bessel function of the second kind, order nu (symmetric in nu).
// Throws std::domain_error for x <= 0.
double bessel_k(double nu, double x);

// CDF-family reduced Mellin-Barnes integral:
//   (1/2*pi*i) Int_L Gamma(alpha-s) Gamma(beta-s) z^s / (s (c-s)^(2k+1)) ds
// with L a vertical line, 0 < Re(s) < min(alpha, beta, c).  Equivalent to the
// G^{2k+3,1}_{2k+2,2k+4} function with parameter rows
// (1, {c+1}x(2k+1); alpha, beta, {c}x(2k+1), 0) after cancelling the repeated
// Gamma ratios via Gamma(x+1) = x Gamma(x).
double meijer_g_cdf_family(int k, double alpha, double beta, double c, double z,
                           const MeijerOptions& opts = {});

// PDF-family reduced Mellin-Barnes integral:
//   (1/2*pi*i) Int_L Gamma(alpha-1-s) Gamma(beta-1-s) z^s / (c-1-s)^(2k+1) ds
// with Re(s) < min(alpha, beta, c) - 1.  Equivalent to the
// G^{2k+3,0}_{2k+1,2k+3} function with rows ({c}x(2k+1); alpha-1, beta-1,
// {c-1}x(2k+1)).
double meijer_g_pdf_family(int k, double alpha, double beta, double c, double z,
                           const MeijerOptions& opts = {});

// Default contour for one family (midpoint of the valid strip for the CDF
// family; fixed offset left of the pole bound for the PDF family, whose strip
// is unbounded on the left).
ContourSpec default_contour(const MellinIntegrand& mi, const MeijerOptions& opts = {});

// Batched evaluation of the series  sum_{k=0}^{n_terms-1} C(2k,k) (v/2)^{2k} G_k(z)
// sharing one contour pass across all k (the per-node Gamma factors dominate the
// cost).  The contour additionally satisfies |c - s| > v on the line so the
// inner k-sum converges node-wise.  Returns the partial sums for k < n_terms.
std::vector<double> mellin_series_partial_sums(Family family, double alpha, double beta,
                                               double c, double v, double z, int n_terms,
                                               const MeijerOptions& opts = {});

}  // namespace orisfso::specfun
