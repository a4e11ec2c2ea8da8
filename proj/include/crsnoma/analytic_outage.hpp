#pragma once

#include "crsnoma/model.hpp"

namespace crsnoma::outage {

enum class Method { closed_form, monte_carlo, asymptote };

struct OutagePoint {
    double p_out_s1 = 0.0;
    double p_out_s2 = 0.0;
    double rho = 0.0;
    Combiner combiner = Combiner::sc;
    Method method = Method::closed_form;
};

// CDF of the selection-combining gain max_i |h_i|^2 over n antennas with
// per-antenna mean omega: (1 - e^{-x/omega})^n, evaluated in product form.
double cdf_sc_gain(int n, double omega, double x);

// CDF of the maximal-ratio-combining gain sum_i |h_i|^2: P(n, x/omega).
double cdf_mrc_gain(int n, double omega, double x);

struct OutageValue {
    double p = 1.0;
    bool infeasible = false;  // a1 <= eps1*a2: p is identically 1
};

// Closed-form outage probabilities. Infeasible splits return exactly 1
// (annotated) so design-space sweeps remain total.
OutageValue outage_s1(const SystemConfig& cfg, double rho, Combiner comb);
OutageValue outage_s2(const SystemConfig& cfg, double rho, Combiner comb);

// Both symbols at one SNR, as a sweep-ready point.
OutagePoint closed_form_point(const SystemConfig& cfg, double rho, Combiner comb);

// High-SNR law p_out ~ coefficient * rho^{-order}. Order is always
// min(n_r, n_d); the coefficient keeps only the dominant link term,
// both summed when n_r == n_d (the cross product decays one order
// faster and drops out).
struct DiversityAsymptote {
    double coefficient = 0.0;
    int order = 0;
};

DiversityAsymptote diversity_asymptote_s1(const SystemConfig& cfg, Combiner comb);
DiversityAsymptote diversity_asymptote_s2(const SystemConfig& cfg, Combiner comb);

}  // namespace crsnoma::outage
