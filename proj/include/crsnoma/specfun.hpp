#pragma once

#include "crsnoma/errors.hpp"

namespace crsnoma::specfun {

// Euler-Mascheroni constant, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Highest supported order n in Gamma(-n, x). The rate sums need
// n = i + j <= 2*(antenna cap - 1); 64 leaves headroom over the
// default cap of 16 antennas.
inline constexpr int kMaxNegOrder = 64;

// A value of the incomplete-gamma family, possibly carrying an
// analytic factor e^x so it stays finite where the raw quantity
// underflows (x >= ~700).
struct ScaledGammaValue {
    double value = 0.0;
    bool is_exp_scaled = false;
};

// Gamma(0, x) = E1(x), x > 0. Power series for x <= 1, modified Lentz
// continued fraction for x > 1. Relative error <= ~1e-13 over
// [1e-300, 700]; underflows to 0 past x ~ 745 like the true value.
double upper_gamma_zero(double x);

// e^x * Gamma(0, x), finite for any x up to 1e300.
double exp_scaled_upper_gamma_zero(double x);

// Raw Gamma(0,x) while it is representable, the e^x-scaled value beyond
// (x >= 700, where the raw quantity underflows).
ScaledGammaValue auto_scaled_upper_gamma_zero(double x);

// e^x * E_p(x) for integer p >= 1, x > 0. This is the kernel every
// closed-form rate consumes: Gamma(-n, x) * x^n * e^x = e^x E_{n+1}(x),
// bounded in (0, 1]. Forward recurrence from E1 with running
// cancellation estimate; falls back to a direct evaluation of E_p
// (continued fraction for x > 1, power series otherwise) once the
// recurrence has lost ~4 digits.
double scaled_expint(int p, double x);

// Gamma(-n, x) = x^{-n} E_{n+1}(x), n >= 0, x > 0.
double upper_gamma_neg_int(int n, double x);

// e^x * Gamma(-n, x).
double exp_scaled_upper_gamma_neg_int(int n, double x);

// Regularized lower incomplete gamma P(shape, x) = gamma(shape,x)/Gamma(shape)
// for integer shape >= 1, x >= 0. Erlang complement for x >= shape,
// ascending series for x < shape (the complement form cancels
// catastrophically exactly where outage curves live, ~1e-12 and below).
double regularized_lower_gamma(int shape, double x);

namespace detail {
// Direct evaluations, exposed for the unit tests.
double e1_series(double x);                    // x <= 1
double scaled_ep_continued_fraction(int p, double x);  // x > ~0.9
double ep_series(int p, double x);             // p >= 2, x <= 1
double erlang_complement(int shape, double x); // 1 - e^{-x} sum x^m/m!
}  // namespace detail

}  // namespace crsnoma::specfun
