#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "crsnoma/analytic_rates.hpp"
#include "crsnoma/model.hpp"
#include "crsnoma/oracle.hpp"

namespace crsnoma::sweep {

// One result row: a (scheme x combiner x antennas x SNR x method) cell.
// Rate and outage columns are mutually exclusive; absent values are NaN
// and serialize as empty cells. Floats print with 12 significant digits.
struct SweepRow {
    std::string scheme;    // "noma" | "oma"
    std::string combiner;  // "sc" | "mrc"
    int n_r = 1;
    int n_d = 1;
    double rho_db = 0.0;
    std::string method;  // "closed-form" | "quadrature" | "monte-carlo"
    double c_s1, c_s2, c_sum, p_out_s1, p_out_s2;
    double se_c_s1, se_c_s2, se_c_sum, se_p_out_s1, se_p_out_s2;
    bool has_mc = false;  // seed/trials columns populated
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;

    SweepRow();
};

struct SweepResult {
    std::vector<SweepRow> rows;

    static const char* csv_header();
    void emit_csv(std::ostream& os) const;
    void emit_json(std::ostream& os) const;
    static SweepResult parse_csv(std::istream& is);
};

enum class Quantity { rates, outage };

struct SweepOptions {
    SystemConfig base;  // antenna counts replaced per sweep entry
    std::vector<std::pair<int, int>> antennas = {{1, 1}};
    SnrGrid grid;
    std::vector<Combiner> combiners = {Combiner::sc};
    std::vector<Quantity> quantities = {Quantity::rates};
    std::vector<rates::Method> methods = {rates::Method::closed_form};
    bool include_oma = true;  // OMA baseline rows (quadrature/MC methods only)
    oracle::OmaCombiner oma_combiner = oracle::OmaCombiner::mrc_across_slots;
    std::uint64_t seed = 1;
    std::uint64_t trials_rates = 1000000;
    std::uint64_t trials_outage = 10000000;
    int workers = 0;
};

// Evaluates every cell in declared order (combiner, quantity, antennas,
// SNR, method). Output is deterministic for a fixed seed regardless of
// worker count.
SweepResult run_sweep(const SweepOptions& opts);

std::string format_double(double v);  // %.12g

}  // namespace crsnoma::sweep
