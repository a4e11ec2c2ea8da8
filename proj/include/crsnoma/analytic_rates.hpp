#pragma once

#include "crsnoma/model.hpp"

namespace crsnoma::rates {

enum class Scheme { noma_sc, noma_mrc, oma_sc, oma_mrc };
enum class Method { closed_form, quadrature, monte_carlo };

struct RateResult {
    double c_s1 = 0.0;   // bits/s/Hz
    double c_s2 = 0.0;   // 0 for OMA schemes
    double c_sum = 0.0;  // c_s1 + c_s2
    Scheme scheme = Scheme::noma_sc;
    Method method = Method::closed_form;
};

// Average achievable rates of the CRS-NOMA closed forms. All results in
// bits/s/Hz. s1 saturates at 0.5*log2(1/a2); s2 grows ~0.5*log2(rho).
// Any evaluation below -1e-12 raises NumericalRegimeError instead of
// being clamped silently.
double rate_s1_sc(const SystemConfig& cfg, double rho);
double rate_s2_sc(const SystemConfig& cfg, double rho);
RateResult rate_sum_sc(const SystemConfig& cfg, double rho);

double rate_s1_mrc(const SystemConfig& cfg, double rho);
double rate_s2_mrc(const SystemConfig& cfg, double rho);
RateResult rate_sum_mrc(const SystemConfig& cfg, double rho);

}  // namespace crsnoma::rates
