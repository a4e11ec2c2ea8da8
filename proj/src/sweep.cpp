#include "crsnoma/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "crsnoma/analytic_outage.hpp"

namespace crsnoma::sweep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* kHeader =
    "scheme,combiner,n_r,n_d,rho_db,method,c_s1,c_s2,c_sum,p_out_s1,p_out_s2,"
    "se_c_s1,se_c_s2,se_c_sum,se_p_out_s1,se_p_out_s2,seed,trials";

std::string cell(double v) { return std::isnan(v) ? std::string() : format_double(v); }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_cell(const std::string& s) { return s.empty() ? kNaN : std::stod(s); }

const char* method_name(rates::Method m) {
    switch (m) {
        case rates::Method::closed_form: return "closed-form";
        case rates::Method::quadrature: return "quadrature";
        case rates::Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

SweepRow base_row(const SystemConfig& cfg, Combiner comb, double rho_db, rates::Method m) {
    SweepRow row;
    row.combiner = comb == Combiner::sc ? "sc" : "mrc";
    row.n_r = cfg.n_r;
    row.n_d = cfg.n_d;
    row.rho_db = rho_db;
    row.method = method_name(m);
    return row;
}

}  // namespace

SweepRow::SweepRow()
    : c_s1(kNaN),
      c_s2(kNaN),
      c_sum(kNaN),
      p_out_s1(kNaN),
      p_out_s2(kNaN),
      se_c_s1(kNaN),
      se_c_s2(kNaN),
      se_c_sum(kNaN),
      se_p_out_s1(kNaN),
      se_p_out_s2(kNaN) {}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* SweepResult::csv_header() { return kHeader; }

void SweepResult::emit_csv(std::ostream& os) const {
    os << kHeader << '\n';
    for (const auto& r : rows) {
        os << r.scheme << ',' << r.combiner << ',' << r.n_r << ',' << r.n_d << ','
           << format_double(r.rho_db) << ',' << r.method << ',' << cell(r.c_s1) << ','
           << cell(r.c_s2) << ',' << cell(r.c_sum) << ',' << cell(r.p_out_s1) << ','
           << cell(r.p_out_s2) << ',' << cell(r.se_c_s1) << ',' << cell(r.se_c_s2) << ','
           << cell(r.se_c_sum) << ',' << cell(r.se_p_out_s1) << ',' << cell(r.se_p_out_s2)
           << ',';
        if (r.has_mc) {
            os << r.seed << ',' << r.trials;
        } else {
            os << ',';
        }
        os << '\n';
    }
}

void SweepResult::emit_json(std::ostream& os) const {
    auto jcell = [](double v) { return std::isnan(v) ? std::string("null") : format_double(v); };
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "  {\"scheme\":\"" << r.scheme << "\",\"combiner\":\"" << r.combiner
           << "\",\"n_r\":" << r.n_r << ",\"n_d\":" << r.n_d
           << ",\"rho_db\":" << format_double(r.rho_db) << ",\"method\":\"" << r.method
           << "\",\"c_s1\":" << jcell(r.c_s1) << ",\"c_s2\":" << jcell(r.c_s2)
           << ",\"c_sum\":" << jcell(r.c_sum) << ",\"p_out_s1\":" << jcell(r.p_out_s1)
           << ",\"p_out_s2\":" << jcell(r.p_out_s2) << ",\"se_c_s1\":" << jcell(r.se_c_s1)
           << ",\"se_c_s2\":" << jcell(r.se_c_s2) << ",\"se_c_sum\":" << jcell(r.se_c_sum)
           << ",\"se_p_out_s1\":" << jcell(r.se_p_out_s1)
           << ",\"se_p_out_s2\":" << jcell(r.se_p_out_s2) << ",\"seed\":";
        if (r.has_mc) {
            os << r.seed << ",\"trials\":" << r.trials;
        } else {
            os << "null,\"trials\":null";
        }
        os << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    os << "]\n";
}

SweepResult SweepResult::parse_csv(std::istream& is) {
    SweepResult out;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("parse_csv: empty input");
    if (line != kHeader) throw std::runtime_error("parse_csv: unexpected header: " + line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 18) throw std::runtime_error("parse_csv: malformed row: " + line);
        SweepRow r;
        r.scheme = f[0];
        r.combiner = f[1];
        r.n_r = std::stoi(f[2]);
        r.n_d = std::stoi(f[3]);
        r.rho_db = std::stod(f[4]);
        r.method = f[5];
        r.c_s1 = parse_cell(f[6]);
        r.c_s2 = parse_cell(f[7]);
        r.c_sum = parse_cell(f[8]);
        r.p_out_s1 = parse_cell(f[9]);
        r.p_out_s2 = parse_cell(f[10]);
        r.se_c_s1 = parse_cell(f[11]);
        r.se_c_s2 = parse_cell(f[12]);
        r.se_c_sum = parse_cell(f[13]);
        r.se_p_out_s1 = parse_cell(f[14]);
        r.se_p_out_s2 = parse_cell(f[15]);
        r.has_mc = !f[16].empty();
        if (r.has_mc) {
            r.seed = std::stoull(f[16]);
            r.trials = std::stoull(f[17]);
        }
        out.rows.push_back(std::move(r));
    }
    return out;
}

SweepResult run_sweep(const SweepOptions& opts) {
    if (opts.grid.size() == 0) throw std::invalid_argument("run_sweep: empty SNR grid");
    SweepResult out;
    for (const Combiner comb : opts.combiners) {
        for (const Quantity q : opts.quantities) {
            for (const auto& [nr, nd] : opts.antennas) {
                SystemConfig cfg = opts.base;
                cfg.n_r = nr;
                cfg.n_d = nd;
                cfg.validate();
                for (std::size_t gi = 0; gi < opts.grid.size(); ++gi) {
                    const double rho = opts.grid.rho[gi];
                    const double rho_db = opts.grid.rho_db[gi];
                    for (const rates::Method m : opts.methods) {
                        if (q == Quantity::rates) {
                            // NOMA row
                            SweepRow row = base_row(cfg, comb, rho_db, m);
                            row.scheme = "noma";
                            if (m == rates::Method::closed_form) {
                                const auto rr = comb == Combiner::sc ? rates::rate_sum_sc(cfg, rho)
                                                                     : rates::rate_sum_mrc(cfg, rho);
                                row.c_s1 = rr.c_s1;
                                row.c_s2 = rr.c_s2;
                                row.c_sum = rr.c_sum;
                            } else if (m == rates::Method::quadrature) {
                                const bool sc = comb == Combiner::sc;
                                row.c_s1 = oracle::quad_rate(
                                    cfg, rho, sc ? oracle::RateKind::s1_sc : oracle::RateKind::s1_mrc);
                                row.c_s2 = oracle::quad_rate(
                                    cfg, rho, sc ? oracle::RateKind::s2_sc : oracle::RateKind::s2_mrc);
                                row.c_sum = row.c_s1 + row.c_s2;
                            } else {
                                const auto scheme = comb == Combiner::sc ? rates::Scheme::noma_sc
                                                                         : rates::Scheme::noma_mrc;
                                const auto mc = oracle::mc_rate(cfg, rho, scheme, opts.trials_rates,
                                                                opts.seed, opts.oma_combiner,
                                                                opts.workers);
                                row.c_s1 = mc.s1.mean;
                                row.c_s2 = mc.s2.mean;
                                row.c_sum = mc.sum.mean;
                                row.se_c_s1 = mc.s1.std_error;
                                row.se_c_s2 = mc.s2.std_error;
                                row.se_c_sum = mc.sum.std_error;
                                row.has_mc = true;
                                row.seed = opts.seed;
                                row.trials = opts.trials_rates;
                            }
                            out.rows.push_back(std::move(row));
                            // OMA baseline row (no closed form exists)
                            if (opts.include_oma && m != rates::Method::closed_form) {
                                SweepRow orow = base_row(cfg, comb, rho_db, m);
                                orow.scheme = "oma";
                                if (m == rates::Method::quadrature) {
                                    orow.c_s1 = oracle::quad_rate(cfg, rho,
                                                                  comb == Combiner::sc
                                                                      ? oracle::RateKind::oma_sc
                                                                      : oracle::RateKind::oma_mrc,
                                                                  opts.oma_combiner);
                                    orow.c_s2 = 0.0;
                                    orow.c_sum = orow.c_s1;
                                } else {
                                    const auto scheme = comb == Combiner::sc
                                                            ? rates::Scheme::oma_sc
                                                            : rates::Scheme::oma_mrc;
                                    const auto mc = oracle::mc_rate(cfg, rho, scheme,
                                                                    opts.trials_rates, opts.seed,
                                                                    opts.oma_combiner, opts.workers);
                                    orow.c_s1 = mc.s1.mean;
                                    orow.c_s2 = 0.0;
                                    orow.c_sum = mc.sum.mean;
                                    orow.se_c_s1 = mc.s1.std_error;
                                    orow.se_c_sum = mc.sum.std_error;
                                    orow.has_mc = true;
                                    orow.seed = opts.seed;
                                    orow.trials = opts.trials_rates;
                                }
                                out.rows.push_back(std::move(orow));
                            }
                        } else {  // outage (NOMA only; quadrature not applicable)
                            if (m == rates::Method::quadrature) continue;
                            SweepRow row = base_row(cfg, comb, rho_db, m);
                            row.scheme = "noma";
                            if (m == rates::Method::closed_form) {
                                const auto pt = outage::closed_form_point(cfg, rho, comb);
                                row.p_out_s1 = pt.p_out_s1;
                                row.p_out_s2 = pt.p_out_s2;
                            } else {
                                const auto mc = oracle::mc_outage(cfg, rho, comb,
                                                                  opts.trials_outage, opts.seed,
                                                                  opts.workers);
                                row.p_out_s1 = mc.s1.mean;
                                row.p_out_s2 = mc.s2.mean;
                                row.se_p_out_s1 = mc.s1.std_error;
                                row.se_p_out_s2 = mc.s2.std_error;
                                row.has_mc = true;
                                row.seed = opts.seed;
                                row.trials = opts.trials_outage;
                            }
                            out.rows.push_back(std::move(row));
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace crsnoma::sweep
