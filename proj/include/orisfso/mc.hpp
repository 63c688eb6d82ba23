#pragma once
#include <cstdint>
#include <random>

#include "orisfso/outage.hpp"

namespace orisfso::mc {

// Everything a sampler needs, precomputed once per scenario.
// The misalignment gain is drawn exactly: with Y = lambda1*G1^2 + lambda2*G2^2
// (G_i standard normal), h_g = A0*exp(-Y) has precisely the production
// density, because the weights solve lambda1 + lambda2 = c/omega^2 and
// lambda1 - lambda2 = v/omega^2, i.e. lambda1 = 1/(2*q*omega),
// lambda2 = q/(2*omega).  No rejection step, no tables.
struct SamplerParams {
    double lambda1, lambda2;
    double alpha, beta;
    double A0, h_l;

    static SamplerParams from_channel(const channel::ChannelParams& p);
};

struct McEstimate {
    double p_hat = 0.0;
    std::uint64_t n = 0;
    double std_err = 0.0;  // sqrt(p_hat*(1 - p_hat)/n)
    std::uint64_t seed = 0;
};

// What estimate_op simulates.  `oma` switches to the TDMA benchmark (then
// `which` picks the receiver and Single is invalid); otherwise Single uses the
// full power budget at rate R1.
struct McScenario {
    channel::ChannelParams params;
    outage::NomaConfig cfg;
    outage::Receiver which = outage::Receiver::Rx1;
    bool oma = false;
};

// Stateless 64-bit mixer used to derive per-shard RNG streams.
std::uint64_t splitmix64(std::uint64_t x);

// Product of two unit-mean Gamma variates.
double sample_turbulence(std::mt19937_64& rng, double alpha, double beta);

// Exact misalignment-gain draw, always in (0, A0].
double sample_pointing(std::mt19937_64& rng, const SamplerParams& p);

// Composite gain h = h_l * h_s * h_g.
double sample_channel(std::mt19937_64& rng, const SamplerParams& p);

// Seeded outage-frequency estimate.  Trials are split into fixed 65536-trial
// shards, each with its own splitmix64-derived mt19937_64 stream, and the
// reduction is a plain count sum — so the result is bit-identical for any
// worker count.  Worker count: ORISFSO_THREADS if set, else hardware
// concurrency.  When the config violates the SIC operation condition the
// outage event holds for every possible draw, so the estimate is returned as
// exactly 1 without sampling.
McEstimate estimate_op(std::uint64_t seed, const McScenario& sc, std::uint64_t n);

}  // namespace orisfso::mc
