#include "orisfso/mc.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace orisfso::mc {

namespace {
constexpr std::uint64_t kShard = 65536;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

SamplerParams SamplerParams::from_channel(const channel::ChannelParams& p) {
    SamplerParams s{};
    s.lambda1 = 1.0 / (2.0 * p.q * p.omega);
    s.lambda2 = p.q / (2.0 * p.omega);
    s.alpha = p.alpha;
    s.beta = p.beta;
    s.A0 = p.A0;
    s.h_l = p.h_l;
    // weights must reproduce (c, v) through the hyperbolic identity
    const double c_back = (s.lambda1 + s.lambda2) * p.omega * p.omega;
    const double v_back = (s.lambda1 - s.lambda2) * p.omega * p.omega;
    if (std::fabs(c_back - p.c) > 1e-10 * p.c ||
        std::fabs(v_back - p.v) > 1e-10 * std::max(std::fabs(p.v), 1.0))
        throw std::logic_error("SamplerParams: weight identities violated");
    return s;
}

double sample_turbulence(std::mt19937_64& rng, double alpha, double beta) {
    std::gamma_distribution<double> ga(alpha, 1.0 / alpha);
    std::gamma_distribution<double> gb(beta, 1.0 / beta);
    return ga(rng) * gb(rng);
}

double sample_pointing(std::mt19937_64& rng, const SamplerParams& p) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double g1 = nd(rng);
    const double g2 = nd(rng);
    const double y = p.lambda1 * g1 * g1 + p.lambda2 * g2 * g2;
    return p.A0 * std::exp(-y);
}

double sample_channel(std::mt19937_64& rng, const SamplerParams& p) {
    return p.h_l * sample_turbulence(rng, p.alpha, p.beta) *
           sample_pointing(rng, p);
}

namespace {

unsigned worker_count(std::uint64_t shards) {
    unsigned n = 0;
    if (const char* env = std::getenv("ORISFSO_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) n = static_cast<unsigned>(parsed);
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<std::uint64_t>(n) > shards)
        n = static_cast<unsigned>(shards);
    return n;
}

struct TrialJudge {
    outage::Receiver which;
    bool oma;
    double gbar, a1, a2, B1, B2, gth1, gth2, gth_oma, B_oma;

    explicit TrialJudge(const McScenario& sc) {
        which = sc.which;
        oma = sc.oma;
        const auto& c = sc.cfg;
        gbar = outage::snr_linear(c.snr_db);
        a1 = c.a1;
        a2 = c.a2;
        B1 = c.B1;
        B2 = c.B2;
        gth1 = outage::threshold(c.R1);
        gth2 = outage::threshold(c.R2);
        const double R = which == outage::Receiver::Rx2 ? c.R2 : c.R1;
        gth_oma = std::exp2(2.0 * R) - 1.0;
        B_oma = which == outage::Receiver::Rx2 ? B2 : B1;
    }

    bool outage(double h) const {
        const double h2 = h * h;
        if (oma) return B_oma * gbar * h2 < gth_oma;
        switch (which) {
            case outage::Receiver::Single:
                return gbar * h2 < gth1;
            case outage::Receiver::Rx1: {
                const double g1 =
                    a1 * B1 * gbar * h2 / (a2 * B1 * gbar * h2 + 1.0);
                return g1 < gth1;
            }
            case outage::Receiver::Rx2: {
                const double g21 =
                    a1 * B2 * gbar * h2 / (a2 * B2 * gbar * h2 + 1.0);
                const double g22 = a2 * B2 * gbar * h2;
                return !(g21 >= gth1 && g22 >= gth2);
            }
        }
        return true;
    }
};

}  // namespace

McEstimate estimate_op(std::uint64_t seed, const McScenario& sc, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("estimate_op: n >= 1 required");
    outage::validate(sc.cfg);
    if (sc.oma && sc.which == outage::Receiver::Single)
        throw std::invalid_argument("estimate_op: OMA needs Rx1 or Rx2");

    McEstimate out{};
    out.n = n;
    out.seed = seed;

    // SIC operation condition: when violated the strong user's SINR is capped
    // below the threshold for every realization, so no sampling is needed
    if (!sc.oma && sc.which != outage::Receiver::Single &&
        !(sc.cfg.a1 / sc.cfg.a2 > outage::threshold(sc.cfg.R1))) {
        out.p_hat = 1.0;
        out.std_err = 0.0;
        return out;
    }

    const SamplerParams sp = SamplerParams::from_channel(sc.params);
    const TrialJudge judge(sc);
    const std::uint64_t shards = (n + kShard - 1) / kShard;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> hits{0};

    auto work = [&]() {
        std::uint64_t local = 0;
        for (std::uint64_t i = next.fetch_add(1); i < shards;
             i = next.fetch_add(1)) {
            std::mt19937_64 rng(splitmix64(seed + i * kGolden));
            const std::uint64_t lo = i * kShard;
            const std::uint64_t hi = std::min(n, lo + kShard);
            for (std::uint64_t t = lo; t < hi; ++t)
                if (judge.outage(sample_channel(rng, sp))) ++local;
        }
        hits.fetch_add(local);
    };

    const unsigned workers = worker_count(shards);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    const double p = static_cast<double>(hits.load()) / static_cast<double>(n);
    out.p_hat = p;
    out.std_err = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return out;
}

}  // namespace orisfso::mc
