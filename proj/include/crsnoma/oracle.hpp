#pragma once

#include <cstdint>

#include "crsnoma/analytic_rates.hpp"
#include "crsnoma/model.hpp"

namespace crsnoma::oracle {

// Destination combining across the two OMA time slots. The primary
// definition applies MRC to the per-slot SC/MRC outputs; the degraded
// variant re-applies SC across slots (W = min{d_sr, max{d_sd, d_rd}}).
enum class OmaCombiner { mrc_across_slots, sc_across_slots };

// One Monte Carlo draw of every channel statistic. The same per-antenna
// draws feed both the SC (max) and MRC (sum) fields, so SC/MRC and
// NOMA/OMA comparisons are paired (common random numbers).
struct FadingRealization {
    double delta_sr = 0.0, delta_sd = 0.0, delta_rd = 0.0;     // max |h|^2
    double lambda_sr = 0.0, lambda_sd = 0.0, lambda_rd = 0.0;  // sum |h|^2
    double w_sc = 0.0;   // min(delta_sr, delta_sd + delta_rd)
    double z_mrc = 0.0;  // min(lambda_sr, lambda_sd + lambda_rd)
};

// Stateless counter-based uniform stream: two SplitMix64 finalizer
// rounds over (key, draw counter), key mixed from (seed, trial index).
// Identical (seed, trial) always reproduces the same draw sequence, so
// trials can be partitioned across workers freely.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial);
    double uniform();                    // in (0, 1]
    double exponential(double mean);     // inverse CDF: -mean*ln(U)
private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

FadingRealization draw_realization(const SystemConfig& cfg, TrialStream& stream);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct McRate {
    McEstimate s1, s2, sum;  // s2/sum degenerate for OMA (s2 = 0)
};

struct McOutage {
    McEstimate s1, s2;  // binomial standard errors
};

// Link-level Monte Carlo of the instantaneous rates. Trials are split
// into fixed blocks reduced in block order, so the result is bit-exact
// for any worker count. workers <= 0 means hardware concurrency; the
// CRS_NOMA_THREADS environment variable caps the count either way.
McRate mc_rate(const SystemConfig& cfg, double rho, rates::Scheme scheme,
               std::uint64_t trials, std::uint64_t seed,
               OmaCombiner oma = OmaCombiner::mrc_across_slots, int workers = 0);

McOutage mc_outage(const SystemConfig& cfg, double rho, Combiner comb,
                   std::uint64_t trials, std::uint64_t seed, int workers = 0);

// Per-realization decode-chain outcomes, exposed so tests can check the
// three disjoint s2 outage cases against the collapsed formula on
// identical samples. g_* are the combined gains of the chosen combiner.
struct OutageEvents {
    bool s1 = false;
    bool s2_decomposed = false;
    bool s2_collapsed = false;
};
OutageEvents outage_events(const SystemConfig& cfg, double rho, double g_sr,
                           double g_sd, double g_rd);

enum class RateKind { s1_sc, s2_sc, s1_mrc, s2_mrc, oma_sc, oma_mrc };

// Adaptive-quadrature evaluation of the integral rate expressions, built
// from the order-statistic / Erlang survival functions. Absolute
// tolerance 1e-10 bits/s/Hz; truncation tail certified analytically.
double quad_rate(const SystemConfig& cfg, double rho, RateKind kind,
                 OmaCombiner oma = OmaCombiner::mrc_across_slots);

// CDF of the two-slot OMA destination statistic (delta_sd + delta_rd for
// SC, lambda_sd + lambda_rd for MRC), by quadrature of the convolution.
double oma_second_hop_cdf(const SystemConfig& cfg, Combiner comb, double x);

// Worker count after applying the CRS_NOMA_THREADS cap.
int resolve_workers(int requested);

}  // namespace crsnoma::oracle
