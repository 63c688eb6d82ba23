#pragma once
// Frozen reference values.  Everything here was computed ahead of time with an
// arbitrary-precision evaluation of the defining integrals/series (contour
// quadrature at 25+ digit working precision), independent of the library code.

namespace frozen {

// ---- special functions -----------------------------------------------------
inline constexpr double lgamma_3p7_2p1i_re = 0.7853469580738222014792393;
inline constexpr double lgamma_3p7_2p1i_im = 2.583012925115262026571724;
inline constexpr double lgamma_0p5_30i_re = -46.20495127064222583515932;
inline constexpr double lgamma_0p5_30i_im = 72.03731042880579321527039;
inline constexpr double lgamma_12p3_m4p56i_re = 17.3790721928624429491637;
inline constexpr double lgamma_12p3_m4p56i_im = -11.36446387017229240365661;

inline constexpr double i0_1 = 1.266065877752008335598245;
inline constexpr double i0_10 = 2815.716628466254471469811;
inline constexpr double i0_60 = 5894077055609801168278817.0;
inline constexpr double log_i0_150 = 146.5765799503518590872267;
inline constexpr double log_i0_700 = 695.8056999984434490768029;

inline constexpr double k_1p3_2p4 = 0.09439930130137431770679672;
inline constexpr double k_3_0p5 = 62.05790952993025638623809;
inline constexpr double k_0p83_12 = 2.262401976244705650772259e-6;

// ---- reduced Mellin-Barnes spot values -------------------------------------
// cdf family: k, alpha, beta, c, z -> value
inline constexpr double gcdf_k0_a2_b4_c6_z1em6 = 1.249998888897583318304632e-13;
inline constexpr double gcdf_k0_a2_b4_c6_z0p5 = 0.02252799552574367114281226;
inline constexpr double gcdf_k1_a4p2_b1p4_c2p8_z0p3 = 0.04378092500790796700299689;
inline constexpr double gcdf_k2_a4p2_b1p4_c2p8_z1p2 = 0.02707288771001286186539423;
inline constexpr double gcdf_k1_a2_b4_c6_z0p5 = 0.001186660947006164195740504;

inline constexpr double gpdf_k0_a2_b4_c6_z1em6 = 2.499996666700819388894452e-7;
inline constexpr double gpdf_k0_a2_b4_c6_z0p5 = 0.07780579439650815040088829;
inline constexpr double gpdf_k1_a4p2_b1p4_c2p8_z0p3 = 0.1496005490885329018638571;
inline constexpr double gpdf_k2_a4p2_b1p4_c2p8_z1p2 = 0.009625156748267251539435832;
inline constexpr double gpdf_k1_a2_b4_c6_z0p5 = 0.003827833844360894078808362;

// ---- derived channel parameters (baseline two-receiver scenario) -----------
struct Params {
    double d_z, w, q, nu1, nu2, t1, t2, t, omega, c, v, A0, h_l, rytov_sq, alpha, beta,
        lam1, lam2, sigma_u1_sq, sigma_u2_sq;
};

// 1000 m path: w = 0.45 m, phi_p = pi/3, phi_r = pi/6
inline constexpr Params rx1 = {
    1000.0, 0.45,
    0.6324555320336758663997787,   // q
    0.06962856318419445840043792,  // nu1
    0.06030010454652230494691789,  // nu2
    1.003238367747012797124043,    // t1
    1.336570130314473725373148,    // t2
    1.157971690464022012529127,    // t
    39.54774248490733571177706,    // omega
    43.77132989954003207360101,    // c
    18.75914138551715660297186,    // v
    0.005330747432113746207397864, // A0
    0.7245860807185600886948252,   // h_l
    0.9954771925563513136117729,   // rytov_sq
    4.399688384728339662853542,    // alpha
    2.571722827839189032054129,    // beta
    0.01999025394038107294640701,  // lam1
    0.007996101576152429178562804, // lam2
    0.00234375, 0.0009375,
};

// 800 m path: w = 0.35 m, phi_p = pi/3, phi_r = pi/4
inline constexpr Params rx2 = {
    800.0, 0.35,
    0.7071067811865475244008444,
    0.08952243837967858937199162,
    0.07752870584552867778889442,
    1.005360011530877870367328,
    1.338689045767281970768551,
    1.160113974783880661478226,
    26.79726564495273956466268,
    28.42279238220507620621655,
    9.474264127401692068738849,
    0.008795816698276898539015825,
    0.7390775100303560978075369,
    0.6612458465599495611948486,
    5.151224207309141781869954,
    3.492715104887960221855131,
    0.02638727363288765122961484,
    0.01319363681644382561480742,
    0.001875, 0.0009375,
};

// Gamma-Gamma shapes for given scintillation strength sigma_R
inline constexpr double alpha_sR0p7 = 6.049416907268521252400589;
inline constexpr double beta_sR0p7 = 4.474420266893038548424263;
inline constexpr double alpha_sR1 = 4.393859025392146786951648;
inline constexpr double beta_sR1 = 2.563631979503694950581379;
inline constexpr double alpha_sR1p3 = 4.010779679899351642776483;
inline constexpr double beta_sR1p3 = 1.854377318243284376386273;

// ---- end-to-end distribution values ----------------------------------------
// CDF at h = frac * A0 * h_l
inline constexpr double cdf_rx2_f0p1 = 0.008081560447833140679383;
inline constexpr double cdf_rx2_f0p5 = 0.2761852463006947087468;
inline constexpr double cdf_rx2_f1 = 0.6340889156909039995455;
inline constexpr double cdf_rx2_f2 = 0.9190409929811750977311;
inline constexpr double cdf_rx1_f0p5 = 0.320728897035304276344;
inline constexpr double cdf_rx1_f1 = 0.639678798043986442555;
inline constexpr double pdf_rx2_f0p5 = 131.151052014800127643;

// pointing-error CDF spots
inline constexpr double Fg_rx2_0p3A0 = 2.045494054650910747432e-11;
inline constexpr double Fg_rx2_0p7A0 = 3.478616319599369404054e-4;
inline constexpr double Fg_rx1_0p5A0 = 5.079643591161428293476e-9;

// factor densities
inline constexpr double fhs_rx2_x1 = 0.5458933096360509690193;
inline constexpr double fhs_rx2_x0p2 = 0.4930014150233230452881;
inline constexpr double fhs_rx1_x1 = 0.4756433329408691835293;
inline constexpr double Fhs_rx2_x1 = 0.6127732092561624107879;
inline constexpr double Fhs_rx1_x0p7 = 0.4555617090254841477684;
inline constexpr double fhg_rx2_0p5A0 = 0.001914373915839519736802;
inline constexpr double fhg_rx1_0p9A0 = 183.6415339448570723601;

// ---- outage references (baseline NOMA configuration) -----------------------
// a1 = 0.9, a2 = 0.1, B1 = 0.4, B2 = 0.6, R1 = 2, R2 = 4.5
inline constexpr double gth2_R4p5 = 21.62741699796952078083;

inline constexpr double op_rx1_80dB = 0.01691892025506721979952;
inline constexpr double op_rx2_80dB = 0.1055405544793947941243;
inline constexpr double op_rx1_100dB = 7.510801718332480948503e-5;
inline constexpr double op_rx2_100dB = 2.104265097395452431297e-4;
inline constexpr double op_rx1_120dB = 2.163694571400361703066e-7;
inline constexpr double op_rx2_120dB = 9.673279234693146712962e-8;

inline constexpr double asym_rx1_80dB = 0.03037751689849131893264;
inline constexpr double asym_rx2_80dB = 0.9892924046643116466042;
inline constexpr double asym_rx1_100dB = 8.143843950797240962822e-5;
inline constexpr double asym_rx2_100dB = 3.181336219094488087553e-4;
inline constexpr double asym_rx1_120dB = 2.183265818485337301772e-7;
inline constexpr double asym_rx2_120dB = 1.023044358897777394146e-7;

inline constexpr double oma_rx1_80dB = 0.05105954252864339705301;
inline constexpr double oma_rx2_80dB = 0.2325757176590742399174;
inline constexpr double oma_rx1_100dB = 2.927651335015432156086e-4;
inline constexpr double oma_rx2_100dB = 7.98460382847266179369e-4;

// pointing-limited synthetic case: alpha=4, beta=3.8, q=0.8, omega=1.4
inline constexpr double plim_c = 1.435;
inline constexpr double plim_v = 0.315;
inline constexpr double plim_exact_cdf_z1em6 = 4.179170980942915061693e-9;

// Gaussian-beam width helper, 1 mm waist, 1550 nm
inline constexpr double w_gauss_400 = 0.1973546629601506003976;
inline constexpr double w_gauss_1000 = 0.4933813370008197785701;

}  // namespace frozen
