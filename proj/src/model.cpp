#include "crsnoma/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace crsnoma {

double SystemConfig::eps1() const { return std::exp2(2.0 * r1) - 1.0; }
double SystemConfig::eps2() const { return std::exp2(2.0 * r2) - 1.0; }

std::vector<std::string> SystemConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("SystemConfig: " + msg); };
    if (!(omega_sd > 0.0) || !(omega_sr > 0.0) || !(omega_rd > 0.0))
        fail("all mean-square gains must be > 0");
    if (std::fabs(a1 + a2 - 1.0) > 1e-12) fail("a1 + a2 must equal 1");
    if (!(a1 > a2)) fail("a1 must exceed a2");
    if (!(a2 > 0.0)) fail("a2 must be > 0");
    if (!(r1 > 0.0) || !(r2 > 0.0)) fail("target rates must be > 0");
    if (n_r < 1 || n_d < 1) fail("antenna counts must be >= 1");
    if (n_r > max_antennas || n_d > max_antennas) fail("antenna count beyond configured cap");

    std::vector<std::string> warnings;
    if (!(omega_sd < omega_sr)) {
        warnings.push_back(
            "omega_sd >= omega_sr: the source-destination link is not weaker than the "
            "source-relay link; formulas stay valid but the relaying topology loses its point");
    }
    return warnings;
}

FeasibilityReport validate_noma_feasibility(const SystemConfig& cfg) {
    FeasibilityReport rep;
    rep.eps1 = cfg.eps1();
    rep.margin = cfg.a1 - rep.eps1 * cfg.a2;
    rep.feasible = rep.margin > 0.0;
    if (!rep.feasible) {
        std::ostringstream os;
        os << "a1 = " << cfg.a1 << " <= eps1*a2 = " << rep.eps1 * cfg.a2
           << ": symbol s1 is in outage at every SNR and Theta1 is undefined";
        rep.note = os.str();
    }
    return rep;
}

DerivedConstants::DerivedConstants(const SystemConfig& cfg, double rho)
    : rho_(rho),
      eps1_(cfg.eps1()),
      eps2_(cfg.eps2()),
      omega_sd_(cfg.omega_sd),
      omega_sr_(cfg.omega_sr),
      omega_rd_(cfg.omega_rd),
      a2_(cfg.a2) {
    if (!(rho > 0.0)) throw DomainError("derive_constants: rho must be > 0");
    const double margin = cfg.a1 - eps1_ * cfg.a2;
    feasible_ = margin > 0.0;
    theta1_ = feasible_ ? eps1_ / (rho * margin) : std::numeric_limits<double>::quiet_NaN();
    theta2_ = eps2_ / (cfg.a2 * rho);
}

double DerivedConstants::theta1() const {
    if (!feasible_) {
        throw InfeasibleConfigError("Theta1 requested for an infeasible power split (a1 <= eps1*a2)");
    }
    return theta1_;
}

double DerivedConstants::theta() const { return std::max(theta1(), theta2_); }

DerivedConstants derive_constants(const SystemConfig& cfg, double rho) {
    return DerivedConstants(cfg, rho);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

SnrGrid SnrGrid::from_db_range(double start_db, double stop_db, double step_db) {
    if (!(step_db > 0.0)) throw std::invalid_argument("SnrGrid: step must be > 0");
    if (stop_db < start_db) throw std::invalid_argument("SnrGrid: stop must be >= start");
    SnrGrid grid;
    const int n = static_cast<int>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) {
        const double db = start_db + i * step_db;
        grid.rho_db.push_back(db);
        grid.rho.push_back(db_to_linear(db));
    }
    return grid;
}

}  // namespace crsnoma
