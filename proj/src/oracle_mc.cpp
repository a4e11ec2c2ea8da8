#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "crsnoma/oracle.hpp"

namespace crsnoma::oracle {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;
constexpr std::uint64_t kBlock = 8192;  // trials per reduction block
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t sm64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct Moments {
    double sum = 0.0;
    double sumsq = 0.0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
    }
    void merge(const Moments& o) {
        sum += o.sum;
        sumsq += o.sumsq;
    }
    McEstimate estimate(std::uint64_t n, std::uint64_t seed) const {
        McEstimate e;
        e.trials = n;
        e.seed = seed;
        e.mean = sum / n;
        if (n > 1) {
            double var = (sumsq - sum * sum / n) / (n - 1);
            e.std_error = std::sqrt(std::max(var, 0.0) / n);
        }
        return e;
    }
};

// Runs `body(trial, stream)` over all trials, blockwise in parallel,
// reducing per-block partials in block order so the result does not
// depend on the worker count.
template <typename Partial, typename Body>
std::vector<Partial> run_blocks(std::uint64_t trials, std::uint64_t seed, int workers,
                                Body body) {
    const std::uint64_t nblocks = (trials + kBlock - 1) / kBlock;
    std::vector<Partial> partials(nblocks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            Partial p{};
            const std::uint64_t lo = b * kBlock;
            const std::uint64_t hi = std::min(trials, lo + kBlock);
            for (std::uint64_t t = lo; t < hi; ++t) {
                TrialStream stream(seed, t);
                body(t, stream, p);
            }
            partials[b] = p;
        }
    };
    const int nw = std::max(1, resolve_workers(workers));
    if (nw == 1 || nblocks == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int i = 0; i < nw; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return partials;
}

double rate_bits(double snr) { return 0.5 * std::log1p(snr) * kInvLn2; }

}  // namespace

int resolve_workers(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("CRS_NOMA_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial)
    : key_(sm64_mix(seed + kGolden) ^ sm64_mix(trial + 0xD1B54A32D192ED03ULL)) {}

double TrialStream::uniform() {
    const std::uint64_t bits = sm64_mix(sm64_mix(key_ + (++counter_) * kGolden));
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

double TrialStream::exponential(double mean) { return -mean * std::log(uniform()); }

FadingRealization draw_realization(const SystemConfig& cfg, TrialStream& stream) {
    FadingRealization r;
    auto link = [&stream](int n, double omega, double& mx, double& sm) {
        mx = 0.0;
        sm = 0.0;
        for (int i = 0; i < n; ++i) {
            const double g = stream.exponential(omega);
            mx = std::max(mx, g);
            sm += g;
        }
    };
    link(cfg.n_r, cfg.omega_sr, r.delta_sr, r.lambda_sr);
    link(cfg.n_d, cfg.omega_sd, r.delta_sd, r.lambda_sd);
    link(cfg.n_d, cfg.omega_rd, r.delta_rd, r.lambda_rd);
    r.w_sc = std::min(r.delta_sr, r.delta_sd + r.delta_rd);
    r.z_mrc = std::min(r.lambda_sr, r.lambda_sd + r.lambda_rd);
    return r;
}

McRate mc_rate(const SystemConfig& cfg, double rho, rates::Scheme scheme,
               std::uint64_t trials, std::uint64_t seed, OmaCombiner oma, int workers) {
    if (trials < 1) throw std::invalid_argument("mc_rate: trials must be >= 1");
    struct Partial {
        Moments s1, s2, sum;
    };
    const double a2 = cfg.a2;
    auto partials = run_blocks<Partial>(
        trials, seed, workers, [&](std::uint64_t, TrialStream& stream, Partial& p) {
            const FadingRealization r = draw_realization(cfg, stream);
            switch (scheme) {
                case rates::Scheme::noma_sc:
                case rates::Scheme::noma_mrc: {
                    const bool sc = scheme == rates::Scheme::noma_sc;
                    const double g_sr = sc ? r.delta_sr : r.lambda_sr;
                    const double g_sd = sc ? r.delta_sd : r.lambda_sd;
                    const double g_rd = sc ? r.delta_rd : r.lambda_rd;
                    const double x = std::min(g_sr, g_sd);
                    const double c1 = 0.5 * (std::log1p(rho * x) - std::log1p(a2 * rho * x)) * kInvLn2;
                    const double y = std::min(a2 * g_sr, g_rd);
                    const double c2 = rate_bits(rho * y);
                    p.s1.add(c1);
                    p.s2.add(c2);
                    p.sum.add(c1 + c2);
                    break;
                }
                case rates::Scheme::oma_sc: {
                    const double w = oma == OmaCombiner::mrc_across_slots
                                         ? r.w_sc
                                         : std::min(r.delta_sr, std::max(r.delta_sd, r.delta_rd));
                    const double c = rate_bits(rho * w);
                    p.s1.add(c);
                    p.sum.add(c);
                    break;
                }
                case rates::Scheme::oma_mrc: {
                    const double c = rate_bits(rho * r.z_mrc);
                    p.s1.add(c);
                    p.sum.add(c);
                    break;
                }
            }
        });
    Partial total{};
    for (const auto& p : partials) {
        total.s1.merge(p.s1);
        total.s2.merge(p.s2);
        total.sum.merge(p.sum);
    }
    McRate out;
    out.s1 = total.s1.estimate(trials, seed);
    out.s2 = total.s2.estimate(trials, seed);
    out.sum = total.sum.estimate(trials, seed);
    return out;
}

OutageEvents outage_events(const SystemConfig& cfg, double rho, double g_sr, double g_sd,
                           double g_rd) {
    const double eps1 = cfg.eps1();
    const double eps2 = cfg.eps2();
    auto sinr1 = [&](double g) { return cfg.a1 * rho * g / (1.0 + cfg.a2 * rho * g); };
    const bool relay_s1 = sinr1(g_sr) >= eps1;
    const bool dest_s1 = sinr1(g_sd) >= eps1;
    const bool relay_s2 = cfg.a2 * rho * g_sr >= eps2;
    const bool dest_s2 = rho * g_rd >= eps2;

    OutageEvents ev;
    ev.s1 = !(relay_s1 && dest_s1);
    // The three disjoint decode-chain failures, as decomposed.
    const bool case_relay_fails_s1 = !relay_s1;
    const bool case_relay_fails_s2 = relay_s1 && !relay_s2;
    const bool case_dest_fails_s2 = relay_s1 && relay_s2 && !dest_s2;
    ev.s2_decomposed = case_relay_fails_s1 || case_relay_fails_s2 || case_dest_fails_s2;
    // Collapsed form: relay must clear both thresholds, destination its own.
    ev.s2_collapsed = !(relay_s1 && relay_s2) || !dest_s2;
    return ev;
}

McOutage mc_outage(const SystemConfig& cfg, double rho, Combiner comb, std::uint64_t trials,
                   std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("mc_outage: trials must be >= 1");
    struct Partial {
        std::uint64_t n_s1 = 0, n_s2 = 0;
    };
    auto partials = run_blocks<Partial>(
        trials, seed, workers, [&](std::uint64_t, TrialStream& stream, Partial& p) {
            const FadingRealization r = draw_realization(cfg, stream);
            const bool sc = comb == Combiner::sc;
            const auto ev = outage_events(cfg, rho, sc ? r.delta_sr : r.lambda_sr,
                                          sc ? r.delta_sd : r.lambda_sd,
                                          sc ? r.delta_rd : r.lambda_rd);
            p.n_s1 += ev.s1 ? 1 : 0;
            p.n_s2 += ev.s2_decomposed ? 1 : 0;
        });
    std::uint64_t n1 = 0, n2 = 0;
    for (const auto& p : partials) {
        n1 += p.n_s1;
        n2 += p.n_s2;
    }
    auto binomial = [&](std::uint64_t k) {
        McEstimate e;
        e.trials = trials;
        e.seed = seed;
        e.mean = static_cast<double>(k) / trials;
        e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / trials);
        return e;
    };
    return {binomial(n1), binomial(n2)};
}

}  // namespace crsnoma::oracle
