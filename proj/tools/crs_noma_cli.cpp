// crs-noma: experiment runner for the CRS-NOMA rate/outage analysis.
//
// Sweeps SNR grids and antenna configurations over the closed forms, the
// quadrature oracle and the Monte Carlo simulator, and emits CSV/JSON
// tables. `--validate` cross-checks the three methods against each other
// and exits nonzero on any disagreement.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crsnoma/analytic_outage.hpp"
#include "crsnoma/analytic_rates.hpp"
#include "crsnoma/model.hpp"
#include "crsnoma/oracle.hpp"
#include "crsnoma/sweep.hpp"

namespace {

using namespace crsnoma;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

void apply_config_file(const std::string& path, SystemConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitConfig, "cannot open config file: " + path};
    std::map<std::string, double*> keys = {
        {"omega_sd", &cfg.omega_sd}, {"omega_sr", &cfg.omega_sr}, {"omega_rd", &cfg.omega_rd},
        {"a1", &cfg.a1},             {"a2", &cfg.a2},             {"r1", &cfg.r1},
        {"r2", &cfg.r2}};
    std::map<std::string, int*> int_keys = {
        {"n_r", &cfg.n_r}, {"n_d", &cfg.n_d}, {"max_antennas", &cfg.max_antennas}};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CliError{kExitConfig, path + ":" + std::to_string(lineno) + ": expected key=value"};
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (auto it = keys.find(key); it != keys.end()) {
                *it->second = std::stod(value);
            } else if (auto ii = int_keys.find(key); ii != int_keys.end()) {
                *ii->second = std::stoi(value);
            } else {
                throw CliError{kExitConfig, path + ": unknown config key: " + key};
            }
        } catch (const CliError&) {
            throw;
        } catch (const std::exception&) {
            throw CliError{kExitConfig, path + ": bad value for " + key + ": " + value};
        }
    }
}

SnrGrid parse_snr_range(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':') {
        throw CliError{kExitUsage, "--snr-db expects START:STOP:STEP (dB), got: " + spec};
    }
    try {
        return SnrGrid::from_db_range(start, stop, step);
    } catch (const std::exception& e) {
        throw CliError{kExitUsage, std::string("--snr-db: ") + e.what()};
    }
}

std::vector<std::pair<int, int>> parse_antennas(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) {
            throw CliError{kExitUsage, "--antennas expects NrxNd pairs like 2x2, got: " + item};
        }
        try {
            out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
        } catch (const std::exception&) {
            throw CliError{kExitUsage, "--antennas: bad pair: " + item};
        }
    }
    if (out.empty()) throw CliError{kExitUsage, "--antennas: empty list"};
    return out;
}

std::vector<rates::Method> parse_methods(const std::string& spec) {
    std::vector<rates::Method> out;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "analytic" || item == "closed-form") {
            out.push_back(rates::Method::closed_form);
        } else if (item == "quadrature") {
            out.push_back(rates::Method::quadrature);
        } else if (item == "mc" || item == "monte-carlo") {
            out.push_back(rates::Method::monte_carlo);
        } else {
            throw CliError{kExitUsage, "--methods: unknown method: " + item};
        }
    }
    if (out.empty()) throw CliError{kExitUsage, "--methods: empty list"};
    return out;
}

// The shipped presets mirror the experiment section's parameter sets:
// rate figures on {1x1, 2x2, 4x4}, outage figures on {1x1, 1x2, 2x2, 2x4},
// all with the default channel profile and 0..40 dB.
void apply_preset(const std::string& name, sweep::SweepOptions& opts) {
    const std::vector<std::pair<int, int>> rate_set = {{1, 1}, {2, 2}, {4, 4}};
    const std::vector<std::pair<int, int>> outage_set = {{1, 1}, {1, 2}, {2, 2}, {2, 4}};
    opts.grid = SnrGrid::from_db_range(0, 40, 5);
    opts.methods = {rates::Method::closed_form, rates::Method::monte_carlo};
    if (name == "paper-fig2a") {
        opts.quantities = {sweep::Quantity::rates};
        opts.combiners = {Combiner::sc};
        opts.antennas = rate_set;
    } else if (name == "paper-fig2b") {
        opts.quantities = {sweep::Quantity::rates};
        opts.combiners = {Combiner::mrc};
        opts.antennas = rate_set;
    } else if (name == "paper-fig3") {
        opts.quantities = {sweep::Quantity::outage};
        opts.combiners = {Combiner::sc};
        opts.antennas = outage_set;
    } else if (name == "paper-fig4") {
        opts.quantities = {sweep::Quantity::outage};
        opts.combiners = {Combiner::mrc};
        opts.antennas = outage_set;
    } else {
        throw CliError{kExitUsage,
                       "--preset: unknown preset " + name +
                           " (expected paper-fig2a|paper-fig2b|paper-fig3|paper-fig4)"};
    }
}

struct ValidationStats {
    int checks = 0;
    int failures = 0;
    double max_quad_dev = 0.0;
    double max_mc_sigma = 0.0;

    void check_quad(const std::string& what, double closed, double quad, double tol) {
        ++checks;
        const double dev = std::fabs(closed - quad);
        max_quad_dev = std::max(max_quad_dev, dev);
        if (!(dev <= tol)) {
            ++failures;
            std::cout << "FAIL " << what << ": closed=" << sweep::format_double(closed)
                      << " quadrature=" << sweep::format_double(quad) << " |diff|="
                      << sweep::format_double(dev) << " tol=" << sweep::format_double(tol)
                      << '\n';
        }
    }
    void check_mc(const std::string& what, double closed, double mc, double se) {
        ++checks;
        const double sigmas = se > 0 ? std::fabs(closed - mc) / se : 0.0;
        max_mc_sigma = std::max(max_mc_sigma, sigmas);
        if (!(sigmas <= 4.0)) {
            ++failures;
            std::cout << "FAIL " << what << ": closed=" << sweep::format_double(closed)
                      << " mc=" << sweep::format_double(mc) << " |dev|="
                      << sweep::format_double(sigmas) << " sigma (limit 4)\n";
        }
    }
};

// Triple-agreement suite over the default channel profile: closed form
// vs quadrature (1e-6) and vs Monte Carlo (4 sigma) for all four rate
// formulas, and closed form vs the Monte Carlo decode-chain event counts
// for both outage probabilities.
int run_validate(const sweep::SweepOptions& opts) {
    ValidationStats stats;
    const auto grid = SnrGrid::from_db_range(0, 40, 5);
    for (const auto& [nr, nd] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 4}}) {
        SystemConfig cfg = opts.base;
        cfg.n_r = nr;
        cfg.n_d = nd;
        cfg.validate();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double rho = grid.rho[i];
            std::ostringstream tag;
            tag << "(" << nr << "," << nd << ") " << grid.rho_db[i] << " dB";
            const double s1sc = rates::rate_s1_sc(cfg, rho);
            const double s2sc = rates::rate_s2_sc(cfg, rho);
            const double s1m = rates::rate_s1_mrc(cfg, rho);
            const double s2m = rates::rate_s2_mrc(cfg, rho);
            stats.check_quad("rate_s1_sc " + tag.str(), s1sc,
                             oracle::quad_rate(cfg, rho, oracle::RateKind::s1_sc), 1e-6);
            stats.check_quad("rate_s2_sc " + tag.str(), s2sc,
                             oracle::quad_rate(cfg, rho, oracle::RateKind::s2_sc), 1e-6);
            stats.check_quad("rate_s1_mrc " + tag.str(), s1m,
                             oracle::quad_rate(cfg, rho, oracle::RateKind::s1_mrc), 1e-6);
            stats.check_quad("rate_s2_mrc " + tag.str(), s2m,
                             oracle::quad_rate(cfg, rho, oracle::RateKind::s2_mrc), 1e-6);
            const auto mc_sc = oracle::mc_rate(cfg, rho, rates::Scheme::noma_sc,
                                               opts.trials_rates, opts.seed,
                                               opts.oma_combiner, opts.workers);
            const auto mc_mrc = oracle::mc_rate(cfg, rho, rates::Scheme::noma_mrc,
                                                opts.trials_rates, opts.seed,
                                                opts.oma_combiner, opts.workers);
            stats.check_mc("rate_s1_sc " + tag.str(), s1sc, mc_sc.s1.mean, mc_sc.s1.std_error);
            stats.check_mc("rate_s2_sc " + tag.str(), s2sc, mc_sc.s2.mean, mc_sc.s2.std_error);
            stats.check_mc("rate_s1_mrc " + tag.str(), s1m, mc_mrc.s1.mean, mc_mrc.s1.std_error);
            stats.check_mc("rate_s2_mrc " + tag.str(), s2m, mc_mrc.s2.mean, mc_mrc.s2.std_error);
        }
    }
    for (const auto& [nr, nd] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 4}}) {
        SystemConfig cfg = opts.base;
        cfg.n_r = nr;
        cfg.n_d = nd;
        cfg.validate();
        for (const double db : {10.0, 20.0, 30.0}) {
            const double rho = db_to_linear(db);
            for (const Combiner comb : {Combiner::sc, Combiner::mrc}) {
                std::ostringstream tag;
                tag << "(" << nr << "," << nd << ") " << db << " dB "
                    << (comb == Combiner::sc ? "sc" : "mrc");
                const double p1 = outage::outage_s1(cfg, rho, comb).p;
                const double p2 = outage::outage_s2(cfg, rho, comb).p;
                const auto mc = oracle::mc_outage(cfg, rho, comb, opts.trials_outage,
                                                  opts.seed, opts.workers);
                // binomial SE under the closed-form probability
                auto se0 = [&](double p) { return std::sqrt(p * (1 - p) / opts.trials_outage); };
                stats.check_mc("outage_s1 " + tag.str(), p1, mc.s1.mean, se0(p1));
                stats.check_mc("outage_s2 " + tag.str(), p2, mc.s2.mean, se0(p2));
            }
        }
    }
    std::cout << "validate: " << stats.checks << " checks, " << stats.failures
              << " failures; max |closed-quadrature| = "
              << sweep::format_double(stats.max_quad_dev)
              << ", max closed-vs-MC deviation = " << sweep::format_double(stats.max_mc_sigma)
              << " sigma\n";
    return stats.failures == 0 ? kExitOk : kExitConfig;
}

int run(int argc, char** argv) {
    CLI::App app{"CRS-NOMA receive-diversity rate/outage experiment runner"};
    std::string config_path, preset, methods_spec, snr_spec, antennas_spec;
    std::string out_path, format = "csv", oma_spec = "mrc-across-slots";
    std::string combiner_spec, quantities_spec;
    std::uint64_t seed = 1;
    std::int64_t trials = -1;
    bool validate = false;

    app.add_option("--config", config_path, "key=value config file mirroring the system model");
    app.add_option("--preset", preset, "paper-fig2a|paper-fig2b|paper-fig3|paper-fig4");
    app.add_option("--methods", methods_spec, "comma list of analytic,quadrature,mc");
    app.add_option("--snr-db", snr_spec, "transmit SNR grid START:STOP:STEP in dB");
    app.add_option("--antennas", antennas_spec, "comma list of NrxNd pairs, e.g. 1x1,2x2");
    app.add_option("--combiners", combiner_spec, "comma list of sc,mrc");
    app.add_option("--quantities", quantities_spec, "comma list of rates,outage");
    app.add_option("--trials", trials, "Monte Carlo trials (default 1e6 rates / 1e7 outage)");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--validate", validate, "run the closed-form/quadrature/Monte-Carlo agreement suite");
    app.add_option("--oma-combiner", oma_spec, "mrc-across-slots|sc-across-slots")
        ->check(CLI::IsMember({"mrc-across-slots", "sc-across-slots"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    sweep::SweepOptions opts;
    opts.grid = SnrGrid::from_db_range(0, 40, 5);
    if (!preset.empty()) apply_preset(preset, opts);
    if (!config_path.empty()) apply_config_file(config_path, opts.base);
    if (!snr_spec.empty()) opts.grid = parse_snr_range(snr_spec);
    if (!antennas_spec.empty()) {
        opts.antennas = parse_antennas(antennas_spec);
    } else if (preset.empty()) {
        opts.antennas = {{opts.base.n_r, opts.base.n_d}};
    }
    if (!methods_spec.empty()) opts.methods = parse_methods(methods_spec);
    if (!combiner_spec.empty()) {
        opts.combiners.clear();
        std::istringstream ss(combiner_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "sc") {
                opts.combiners.push_back(Combiner::sc);
            } else if (item == "mrc") {
                opts.combiners.push_back(Combiner::mrc);
            } else {
                throw CliError{kExitUsage, "--combiners: unknown combiner: " + item};
            }
        }
    }
    if (!quantities_spec.empty()) {
        opts.quantities.clear();
        std::istringstream ss(quantities_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "rates") {
                opts.quantities.push_back(sweep::Quantity::rates);
            } else if (item == "outage") {
                opts.quantities.push_back(sweep::Quantity::outage);
            } else {
                throw CliError{kExitUsage, "--quantities: unknown quantity: " + item};
            }
        }
    }
    if (trials >= 0) {
        if (trials == 0) throw CliError{kExitUsage, "--trials must be >= 1"};
        opts.trials_rates = static_cast<std::uint64_t>(trials);
        opts.trials_outage = static_cast<std::uint64_t>(trials);
    }
    opts.seed = seed;
    opts.oma_combiner = oma_spec == "sc-across-slots" ? oracle::OmaCombiner::sc_across_slots
                                                      : oracle::OmaCombiner::mrc_across_slots;

    if (opts.grid.size() == 0) throw CliError{kExitUsage, "empty SNR grid"};

    // Config diagnostics: hard violations abort, soft ones warn.
    for (const auto& [nr, nd] : opts.antennas) {
        SystemConfig probe = opts.base;
        probe.n_r = nr;
        probe.n_d = nd;
        try {
            for (const auto& w : probe.validate()) std::cerr << "warning: " << w << '\n';
        } catch (const std::exception& e) {
            throw CliError{kExitConfig, e.what()};
        }
    }
    const auto feas = validate_noma_feasibility(opts.base);
    if (!feas.feasible) std::cerr << "warning: " << feas.note << '\n';

    if (validate) return run_validate(opts);

    const auto result = sweep::run_sweep(opts);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw CliError{kExitConfig, "cannot open output path: " + out_path};
        os = &file;
    }
    if (format == "json") {
        result.emit_json(*os);
    } else {
        result.emit_csv(*os);
    }
    if (!out_path.empty() && !file.good()) {
        throw CliError{kExitConfig, "write failed: " + out_path};
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
