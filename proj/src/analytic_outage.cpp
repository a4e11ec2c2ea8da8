#include "crsnoma/analytic_outage.hpp"

#include <cmath>

#include "crsnoma/specfun.hpp"

namespace crsnoma::outage {

namespace {

double combine_min_cdf(double fa, double fb) {
    // CDF of min of independent RVs: F_a + F_b - F_a F_b.
    return fa + fb - fa * fb;
}

double link_cdf(Combiner comb, int n, double omega, double x) {
    return comb == Combiner::sc ? cdf_sc_gain(n, omega, x) : cdf_mrc_gain(n, omega, x);
}

// Leading coefficient of F(threshold_hat/rho) ~ c * rho^{-n}:
//   SC : (threshold_hat/omega)^n, via the alternating-series extraction
//   MRC: (threshold_hat/omega)^n / n!
double link_coefficient(Combiner comb, int n, double omega, double threshold_hat) {
    if (comb == Combiner::mrc) {
        double c = 1.0;
        for (int t = 1; t <= n; ++t) c *= threshold_hat / (omega * t);
        return c;
    }
    // (-1)^n / (n! omega^n) * sum_{k=1}^{n} C(n,k) (-1)^k k^n * threshold_hat^n
    double sum = 0.0;
    double cnk = 1.0;
    for (int k = 1; k <= n; ++k) {
        cnk = cnk * (n - k + 1) / k;
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * cnk * std::pow(static_cast<double>(k), n);
    }
    double scale = 1.0;
    for (int t = 1; t <= n; ++t) scale *= threshold_hat / (omega * t);
    return ((n % 2 == 0) ? 1.0 : -1.0) * scale * sum;
}

DiversityAsymptote dominant(const SystemConfig& cfg, Combiner comb, double sr_threshold_hat,
                            double second_threshold_hat, double second_omega, int second_n) {
    DiversityAsymptote out;
    out.order = std::min(cfg.n_r, second_n);
    double c = 0.0;
    if (cfg.n_r <= second_n) c += link_coefficient(comb, cfg.n_r, cfg.omega_sr, sr_threshold_hat);
    if (second_n <= cfg.n_r) c += link_coefficient(comb, second_n, second_omega, second_threshold_hat);
    out.coefficient = c;
    return out;
}

}  // namespace

double cdf_sc_gain(int n, double omega, double x) {
    if (x < 0.0) throw DomainError("cdf_sc_gain: x must be >= 0");
    if (n < 1 || !(omega > 0.0)) throw DomainError("cdf_sc_gain: need n >= 1, omega > 0");
    const double p1 = -std::expm1(-x / omega);
    return std::pow(p1, n);
}

double cdf_mrc_gain(int n, double omega, double x) {
    if (x < 0.0) throw DomainError("cdf_mrc_gain: x must be >= 0");
    if (n < 1 || !(omega > 0.0)) throw DomainError("cdf_mrc_gain: need n >= 1, omega > 0");
    return specfun::regularized_lower_gamma(n, x / omega);
}

OutageValue outage_s1(const SystemConfig& cfg, double rho, Combiner comb) {
    if (!(rho > 0.0)) throw DomainError("outage_s1: rho must be > 0");
    const DerivedConstants dc(cfg, rho);
    if (!dc.feasible()) return {1.0, true};
    const double t1 = dc.theta1();
    const double f_sr = link_cdf(comb, cfg.n_r, cfg.omega_sr, t1);
    const double f_sd = link_cdf(comb, cfg.n_d, cfg.omega_sd, t1);
    return {combine_min_cdf(f_sr, f_sd), false};
}

OutageValue outage_s2(const SystemConfig& cfg, double rho, Combiner comb) {
    if (!(rho > 0.0)) throw DomainError("outage_s2: rho must be > 0");
    const DerivedConstants dc(cfg, rho);
    if (!dc.feasible()) return {1.0, true};
    const double f_sr = link_cdf(comb, cfg.n_r, cfg.omega_sr, dc.theta());
    const double f_rd = link_cdf(comb, cfg.n_d, cfg.omega_rd, dc.eps2() / rho);
    return {combine_min_cdf(f_sr, f_rd), false};
}

OutagePoint closed_form_point(const SystemConfig& cfg, double rho, Combiner comb) {
    OutagePoint p;
    p.rho = rho;
    p.combiner = comb;
    p.method = Method::closed_form;
    p.p_out_s1 = outage_s1(cfg, rho, comb).p;
    p.p_out_s2 = outage_s2(cfg, rho, comb).p;
    return p;
}

DiversityAsymptote diversity_asymptote_s1(const SystemConfig& cfg, Combiner comb) {
    const auto rep = validate_noma_feasibility(cfg);
    if (!rep.feasible) throw InfeasibleConfigError(rep.note);
    const double t1_hat = cfg.eps1() / rep.margin;  // Theta1 * rho
    return dominant(cfg, comb, t1_hat, t1_hat, cfg.omega_sd, cfg.n_d);
}

DiversityAsymptote diversity_asymptote_s2(const SystemConfig& cfg, Combiner comb) {
    const auto rep = validate_noma_feasibility(cfg);
    if (!rep.feasible) throw InfeasibleConfigError(rep.note);
    const double theta_hat = std::max(cfg.eps1() / rep.margin, cfg.eps2() / cfg.a2);
    return dominant(cfg, comb, theta_hat, cfg.eps2(), cfg.omega_rd, cfg.n_d);
}

}  // namespace crsnoma::outage
