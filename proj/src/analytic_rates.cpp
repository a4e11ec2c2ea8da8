#include "crsnoma/analytic_rates.hpp"

#include <cmath>
#include <vector>

#include "crsnoma/specfun.hpp"

namespace crsnoma::rates {

namespace {

constexpr double kHalfInvLn2 = 0.72134752044448170368;  // 1/(2 ln 2)
constexpr double kNegativeGuard = 1e-12;

std::vector<double> binomial_row(int n) {
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    for (int k = 1; k <= n; ++k) c[k] = c[k - 1] * (n - k + 1) / k;
    return c;
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double check_rate(double v, const char* who) {
    if (v < -kNegativeGuard) {
        throw NumericalRegimeError(std::string(who) +
                                   ": closed form evaluated negative outside roundoff");
    }
    return v < 0.0 ? 0.0 : v;
}

void check_order(const SystemConfig& cfg) {
    if (cfg.n_r + cfg.n_d - 2 > specfun::kMaxNegOrder) {
        throw UnsupportedOrderError("rate_mrc: n_r + n_d - 2 beyond incomplete-gamma order cap");
    }
}

// Double alternating binomial sum over the SC order statistics. The
// bracket argument is e^{x}Gamma(0,x) at exponent(k,j)/rho, minus the
// same at exponent/(rho*a2) when subtract_a2_term is set.
double sc_sum(const SystemConfig& cfg, double rho, bool use_theta_exponents,
              bool subtract_a2_term) {
    const auto cr = binomial_row(cfg.n_r);
    const auto cd = binomial_row(cfg.n_d);
    const DerivedConstants dc(cfg, rho);
    KahanSum acc;
    for (int k = 1; k <= cfg.n_r; ++k) {
        for (int j = 1; j <= cfg.n_d; ++j) {
            const double expo = use_theta_exponents ? dc.theta_kj(k, j) : dc.chi(k, j);
            double bracket = specfun::scaled_expint(1, expo / rho);
            if (subtract_a2_term) bracket -= specfun::scaled_expint(1, expo / (rho * cfg.a2));
            const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
            acc.add(sign * cr[k] * cd[j] * bracket);
        }
    }
    return acc.sum;
}

// Double sum over the Erlang (MRC) statistics. Each term reduces to a
// binomial weight C(n,i) u^i v^j / (u+v)^n times a bracket of
// e^x E_{n+1}(x) values: the rho^{i+j} powers of Eq-form cancel against
// x^{i+j} analytically, so nothing here can overflow at any rho.
double mrc_sum(double rho, int n_r, int n_d, double u, double v, double a2,
               bool subtract_a2_term) {
    const double mu = u + v;  // total exponent (phi or xi)
    const double x1 = mu / rho;
    const double x2 = mu / (rho * a2);
    KahanSum acc;
    for (int i = 0; i < n_r; ++i) {
        for (int j = 0; j < n_d; ++j) {
            const int n = i + j;
            // weight = C(n,i) u^i v^j / mu^n
            double weight = 1.0;
            {
                double cni = 1.0;
                for (int t = 1; t <= i; ++t) cni = cni * (n - t + 1) / t;
                weight = cni * std::pow(u / mu, i) * std::pow(v / mu, j);
            }
            double bracket = specfun::scaled_expint(n + 1, x1);
            if (subtract_a2_term) bracket -= specfun::scaled_expint(n + 1, x2);
            acc.add(weight * bracket);
        }
    }
    return acc.sum;
}

}  // namespace

double rate_s1_sc(const SystemConfig& cfg, double rho) {
    if (!(rho > 0.0)) throw DomainError("rate_s1_sc: rho must be > 0");
    return check_rate(kHalfInvLn2 * sc_sum(cfg, rho, false, true), "rate_s1_sc");
}

double rate_s2_sc(const SystemConfig& cfg, double rho) {
    if (!(rho > 0.0)) throw DomainError("rate_s2_sc: rho must be > 0");
    return check_rate(kHalfInvLn2 * sc_sum(cfg, rho, true, false), "rate_s2_sc");
}

RateResult rate_sum_sc(const SystemConfig& cfg, double rho) {
    RateResult r;
    r.scheme = Scheme::noma_sc;
    r.method = Method::closed_form;
    r.c_s1 = rate_s1_sc(cfg, rho);
    r.c_s2 = rate_s2_sc(cfg, rho);
    r.c_sum = r.c_s1 + r.c_s2;
    return r;
}

double rate_s1_mrc(const SystemConfig& cfg, double rho) {
    if (!(rho > 0.0)) throw DomainError("rate_s1_mrc: rho must be > 0");
    check_order(cfg);
    const double v = mrc_sum(rho, cfg.n_r, cfg.n_d, 1.0 / cfg.omega_sr, 1.0 / cfg.omega_sd,
                             cfg.a2, true);
    return check_rate(kHalfInvLn2 * v, "rate_s1_mrc");
}

double rate_s2_mrc(const SystemConfig& cfg, double rho) {
    if (!(rho > 0.0)) throw DomainError("rate_s2_mrc: rho must be > 0");
    check_order(cfg);
    const double v = mrc_sum(rho, cfg.n_r, cfg.n_d, 1.0 / (cfg.omega_sr * cfg.a2),
                             1.0 / cfg.omega_rd, cfg.a2, false);
    return check_rate(kHalfInvLn2 * v, "rate_s2_mrc");
}

RateResult rate_sum_mrc(const SystemConfig& cfg, double rho) {
    RateResult r;
    r.scheme = Scheme::noma_mrc;
    r.method = Method::closed_form;
    r.c_s1 = rate_s1_mrc(cfg, rho);
    r.c_s2 = rate_s2_mrc(cfg, rho);
    r.c_sum = r.c_s1 + r.c_s2;
    return r;
}

}  // namespace crsnoma::rates
