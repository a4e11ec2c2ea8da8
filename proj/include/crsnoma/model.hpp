#pragma once

#include <string>
#include <vector>

#include "crsnoma/errors.hpp"

namespace crsnoma {

enum class Combiner { sc, mrc };

// System configuration: mean-square channel gains (linear), antenna
// counts, NOMA power split and target rates. SNR in dB only at the I/O
// boundary; everything here is linear.
struct SystemConfig {
    double omega_sd = 1.0;
    double omega_sr = 10.0;
    double omega_rd = 2.5;
    int n_r = 1;
    int n_d = 1;
    double a1 = 0.9;
    double a2 = 0.1;
    double r1 = 1.0;  // bits/s/Hz
    double r2 = 1.0;
    int max_antennas = 16;

    double eps1() const;  // 2^{2 r1} - 1
    double eps2() const;

    // Throws std::invalid_argument on hard violations (a1+a2 != 1,
    // a1 <= a2, nonpositive gains/rates, antenna counts out of range).
    // Returns warnings for soft violations (omega_sd >= omega_sr).
    std::vector<std::string> validate() const;
};

struct FeasibilityReport {
    bool feasible = true;          // a1 > eps1 * a2 (strict)
    double eps1 = 0.0;
    double margin = 0.0;           // a1 - eps1 * a2
    std::string note;
};

// s1 can only be decoded at finite SNR when a1 > eps1*a2; otherwise its
// outage probability is 1 at every rho and Theta1 is meaningless.
FeasibilityReport validate_noma_feasibility(const SystemConfig& cfg);

// Every constant the closed forms consume, at one transmit SNR rho.
// The chi/theta/phi/xi exponents do not depend on rho; the Theta
// thresholds scale exactly as 1/rho.
class DerivedConstants {
public:
    DerivedConstants(const SystemConfig& cfg, double rho);

    double rho() const { return rho_; }
    double eps1() const { return eps1_; }
    double eps2() const { return eps2_; }

    bool feasible() const { return feasible_; }
    double theta1() const;             // throws InfeasibleConfigError when infeasible
    double theta2() const { return theta2_; }
    double theta() const;              // max(theta1, theta2)

    double chi(int k, int j) const { return k / omega_sr_ + j / omega_sd_; }
    double theta_kj(int k, int j) const { return k / (omega_sr_ * a2_) + j / omega_rd_; }
    double phi() const { return 1.0 / omega_sr_ + 1.0 / omega_sd_; }
    double xi() const { return 1.0 / (omega_sr_ * a2_) + 1.0 / omega_rd_; }

private:
    double rho_, eps1_, eps2_, theta1_, theta2_;
    double omega_sd_, omega_sr_, omega_rd_, a2_;
    bool feasible_;
};

DerivedConstants derive_constants(const SystemConfig& cfg, double rho);

double db_to_linear(double db);
double linear_to_db(double lin);

// Strictly increasing positive transmit-SNR grid with dB annotations.
struct SnrGrid {
    std::vector<double> rho;     // linear
    std::vector<double> rho_db;

    // "start:stop:step" in dB, stop inclusive up to rounding.
    static SnrGrid from_db_range(double start_db, double stop_db, double step_db);
    std::size_t size() const { return rho.size(); }
};

}  // namespace crsnoma
