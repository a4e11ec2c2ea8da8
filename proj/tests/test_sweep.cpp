#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crsnoma/sweep.hpp"

using namespace crsnoma;
using namespace crsnoma::sweep;

namespace {
SweepOptions small_options() {
    SweepOptions opts;
    opts.grid = SnrGrid::from_db_range(0, 10, 5);
    opts.antennas = {{1, 1}, {2, 2}};
    opts.combiners = {Combiner::sc, Combiner::mrc};
    opts.quantities = {Quantity::rates, Quantity::outage};
    opts.methods = {rates::Method::closed_form, rates::Method::monte_carlo};
    opts.trials_rates = 20000;
    opts.trials_outage = 20000;
    opts.seed = 123;
    return opts;
}
}  // namespace

TEST_CASE("csv header matches the documented schema") {
    CHECK(std::string(SweepResult::csv_header()) ==
          "scheme,combiner,n_r,n_d,rho_db,method,c_s1,c_s2,c_sum,p_out_s1,p_out_s2,"
          "se_c_s1,se_c_s2,se_c_sum,se_p_out_s1,se_p_out_s2,seed,trials");
}

TEST_CASE("one-row sweep emits exactly two CSV lines") {
    SweepOptions opts;
    opts.grid = SnrGrid::from_db_range(10, 10, 1);
    opts.antennas = {{1, 1}};
    opts.quantities = {Quantity::outage};
    opts.methods = {rates::Method::closed_form};
    const auto result = run_sweep(opts);
    REQUIRE(result.rows.size() == 1);
    std::ostringstream os;
    result.emit_csv(os);
    const std::string text = os.str();
    int lines = 0;
    for (char c : text) lines += (c == '\n');
    CHECK(lines == 2);
}

TEST_CASE("emit -> parse -> emit is byte-identical") {
    const auto result = run_sweep(small_options());
    std::ostringstream first;
    result.emit_csv(first);
    std::istringstream back(first.str());
    const auto parsed = SweepResult::parse_csv(back);
    std::ostringstream second;
    parsed.emit_csv(second);
    CHECK(first.str() == second.str());
    CHECK(parsed.rows.size() == result.rows.size());
}

TEST_CASE("row accounting") {
    const auto opts = small_options();
    const auto result = run_sweep(opts);
    // rates: per (combiner, antennas, rho): closed-form noma row + mc noma
    // row + mc oma row = 3; outage: closed-form + mc = 2 rows.
    const std::size_t cells = opts.combiners.size() * opts.antennas.size() * opts.grid.size();
    CHECK(result.rows.size() == cells * (3 + 2));
    // outage rows carry no rate columns and vice versa
    for (const auto& r : result.rows) {
        if (!std::isnan(r.p_out_s1)) {
            CHECK(std::isnan(r.c_s1));
            CHECK(r.scheme == "noma");
        } else {
            CHECK_FALSE(std::isnan(r.c_sum));
        }
        if (r.method == "monte-carlo") {
            CHECK(r.has_mc);
            CHECK(r.trials > 0);
        } else {
            CHECK_FALSE(r.has_mc);
        }
    }
}

TEST_CASE("json output is valid and row-complete") {
    const auto result = run_sweep(small_options());
    std::ostringstream os;
    result.emit_json(os);
    const auto parsed = nlohmann::json::parse(os.str());
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == result.rows.size());
    CHECK(parsed[0].contains("rho_db"));
    CHECK(parsed[0]["scheme"].is_string());
}

TEST_CASE("deterministic output regardless of worker count") {
    auto opts = small_options();
    opts.workers = 1;
    const auto a = run_sweep(opts);
    opts.workers = 6;
    const auto b = run_sweep(opts);
    std::ostringstream sa, sb;
    a.emit_csv(sa);
    b.emit_csv(sb);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("empty grid rejected") {
    SweepOptions opts;
    CHECK_THROWS_AS(run_sweep(opts), std::invalid_argument);
}

TEST_CASE("parse rejects foreign headers") {
    std::istringstream is("a,b,c\n1,2,3\n");
    CHECK_THROWS(SweepResult::parse_csv(is));
}

TEST_CASE("format_double uses 12 significant digits") {
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(5.0) == "5");
    CHECK(format_double(1.23456789012345e-7) == "1.23456789012e-07");
}
