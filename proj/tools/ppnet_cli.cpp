/**
 * \file tools/ppnet_cli.cpp
 *
 * \brief Command-line front end: parses a flat key=value configuration
 *  in human units (dBm, dB, GHz, MHz, metres, per-km^2), converts to
 *  SI, and emits CSV tables for single evaluations, 1-D sweeps,
 *  optimization runs, EE-vs-PSE trade-off curves, Monte Carlo
 *  validation campaigns, and solver convergence studies.
 *
 *  Output is deterministic: re-running a command with the same
 *  configuration and seed produces byte-identical CSV. Numeric cells
 *  carry 17 significant digits so downstream consumers round-trip the
 *  doubles exactly. Per-row computation errors are reported in a
 *  trailing "error" column instead of aborting a sweep.
 *
 * <hr/>
 *
 * Copyright 2026 The ppnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <ppnet/errors.hpp>
#include <ppnet/mcsim.hpp>
#include <ppnet/metrics.hpp>
#include <ppnet/netmodel.hpp>
#include <ppnet/optimizer.hpp>
#include <ppnet/units.hpp>

namespace {

// ---------------------------------------------------------------------------
// Configuration in human units
// ---------------------------------------------------------------------------

/// Flat key=value configuration; defaults are the reference setup
/// (2.1 GHz, 20 MHz, -174 dBm/Hz, 43 dBm transmit, 51.14/48.75 dBm
/// circuit/idle, 250 m cells, 121 MTs/km^2, 5 dB thresholds,
/// beta = alpha = 3.5).
struct cli_config
{
    double beta = 3.5;
    double fc_ghz = 2.1;
    double bw_mhz = 20.0;
    double n0_dbm_hz = -174.0;
    double p_circ_dbm = 51.14;
    double p_idle_dbm = 48.75;
    double p_tx_dbm = 43.0;
    double r_cell_m = 250.0;
    double lambda_mt_per_km2 = 121.0;
    double gamma_d_db = 5.0;
    double gamma_a_db = 5.0;
    double alpha = 3.5;
};

/// Parses a floating value, accepting inf/-inf spellings.
double parse_double(const std::string& key, const std::string& text)
{
    try
    {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        while (used < text.size()
               && std::isspace(static_cast<unsigned char>(text[used])))
        {
            ++used;
        }
        if (used != text.size())
        {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    }
    catch (const std::exception&)
    {
        throw ppnet::config_error(key + ": not a number: '" + text + "'");
    }
}

/// Applies one key=value assignment.
void apply_key(cli_config& cfg, const std::string& key,
               const std::string& value)
{
    const double v = parse_double(key, value);
    if (key == "beta")
    {
        cfg.beta = v;
    }
    else if (key == "fc_ghz")
    {
        cfg.fc_ghz = v;
    }
    else if (key == "bw_mhz")
    {
        cfg.bw_mhz = v;
    }
    else if (key == "n0_dbm_hz")
    {
        cfg.n0_dbm_hz = v;
    }
    else if (key == "p_circ_dbm")
    {
        cfg.p_circ_dbm = v;
    }
    else if (key == "p_idle_dbm")
    {
        cfg.p_idle_dbm = v;
    }
    else if (key == "p_tx_dbm")
    {
        cfg.p_tx_dbm = v;
    }
    else if (key == "r_cell_m")
    {
        cfg.r_cell_m = v;
    }
    else if (key == "lambda_mt_per_km2")
    {
        cfg.lambda_mt_per_km2 = v;
    }
    else if (key == "gamma_d_db")
    {
        cfg.gamma_d_db = v;
    }
    else if (key == "gamma_a_db")
    {
        cfg.gamma_a_db = v;
    }
    else if (key == "alpha")
    {
        cfg.alpha = v;
    }
    else
    {
        throw ppnet::config_error("config: unknown key '" + key + "'");
    }
}

/// Loads a flat key=value file ('#' starts a comment; blank lines ok).
void load_config_file(cli_config& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ppnet::config_error("config: cannot open '" + path + "'");
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
        {
            line.erase(hash);
        }
        const auto strip = [](std::string s) {
            const auto issp = [](unsigned char c) {
                return std::isspace(c) != 0;
            };
            while (!s.empty() && issp(s.front()))
            {
                s.erase(s.begin());
            }
            while (!s.empty() && issp(s.back()))
            {
                s.pop_back();
            }
            return s;
        };
        const std::string body = strip(line);
        if (body.empty())
        {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
        {
            throw ppnet::config_error("config: line "
                                      + std::to_string(line_no)
                                      + ": expected key=value, got '" + body
                                      + "'");
        }
        apply_key(cfg, strip(body.substr(0, eq)), strip(body.substr(eq + 1)));
    }
}

/// Named parameter presets layered over the defaults.
void apply_preset(cli_config& cfg, const std::string& name)
{
    if (name == "sparse-rural")
    {
        // Counter-example regime: strong path-loss decay and a terminal
        // density of 21 per km^2, where the optimal transmit power is
        // not monotone in the cell radius.
        cfg.beta = 6.5;
        cfg.lambda_mt_per_km2 = 21.0;
    }
    else
    {
        throw ppnet::config_error("preset: unknown preset '" + name
                                  + "' (available: sparse-rural)");
    }
}

// ---------------------------------------------------------------------------
// Unit conversion to SI
// ---------------------------------------------------------------------------

struct converted_setup
{
    ppnet::system_params<double> params;
    ppnet::power_profile<double> power;
    double lambda_bs = 0.0;
};

/// Human units -> SI; field-level config_error on malformed input.
converted_setup convert_units(const cli_config& cfg)
{
    const auto require = [](bool ok, const char* message) {
        if (!ok)
        {
            throw ppnet::config_error(message);
        }
    };
    require(std::isfinite(cfg.beta) && cfg.beta > 2.0,
            "beta: must be finite and > 2");
    require(std::isfinite(cfg.alpha) && cfg.alpha > 0.0,
            "alpha: must be finite and > 0");
    require(std::isfinite(cfg.fc_ghz) && cfg.fc_ghz > 0.0,
            "fc_ghz: must be finite and > 0");
    require(std::isfinite(cfg.bw_mhz) && cfg.bw_mhz > 0.0,
            "bw_mhz: must be finite and > 0");
    require(std::isfinite(cfg.n0_dbm_hz), "n0_dbm_hz: must be finite");
    require(std::isfinite(cfg.r_cell_m) && cfg.r_cell_m > 0.0,
            "r_cell_m: must be finite and > 0");
    require(std::isfinite(cfg.lambda_mt_per_km2)
                && cfg.lambda_mt_per_km2 > 0.0,
            "lambda_mt_per_km2: must be finite and > 0");
    require(std::isfinite(cfg.gamma_d_db),
            "gamma_d_db: must be finite (> 0 linear)");
    require(!std::isnan(cfg.gamma_a_db) && cfg.gamma_a_db < HUGE_VAL,
            "gamma_a_db: must be finite or -inf (0 linear)");
    require(!std::isnan(cfg.p_tx_dbm) && cfg.p_tx_dbm < HUGE_VAL,
            "p_tx_dbm: must be finite or -inf (0 W)");
    require(std::isfinite(cfg.p_circ_dbm), "p_circ_dbm: must be finite");
    require(std::isfinite(cfg.p_idle_dbm), "p_idle_dbm: must be finite");

    converted_setup out;
    out.params.beta = cfg.beta;
    out.params.alpha = cfg.alpha;
    out.params.kappa = ppnet::carrier_kappa(ppnet::ghz_to_hz(cfg.fc_ghz));
    out.params.bandwidth_hz = ppnet::mhz_to_hz(cfg.bw_mhz);
    out.params.n0_w_per_hz = ppnet::dbm_to_watt(cfg.n0_dbm_hz);
    out.params.gamma_d = ppnet::db_to_linear(cfg.gamma_d_db);
    out.params.gamma_a = ppnet::db_to_linear(cfg.gamma_a_db);
    out.params.lambda_mt =
        ppnet::per_km2_to_per_m2(cfg.lambda_mt_per_km2);
    out.power.p_tx_w = ppnet::dbm_to_watt(cfg.p_tx_dbm);
    out.power.p_circ_w = ppnet::dbm_to_watt(cfg.p_circ_dbm);
    out.power.p_idle_w = ppnet::dbm_to_watt(cfg.p_idle_dbm);
    out.lambda_bs = ppnet::cell_radius_to_density(cfg.r_cell_m);
    try
    {
        out.params.validate();
        out.power.validate();
    }
    catch (const ppnet::domain_error& e)
    {
        throw ppnet::config_error(std::string("config: ") + e.what());
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV emission
// ---------------------------------------------------------------------------

/// RFC-4180-style table writer: mandatory header, CRLF rows, quoting
/// only where needed, 17-significant-digit numeric cells.
class csv_table
{
public:
    explicit csv_table(std::vector<std::string> header)
        : width_(header.size())
    {
        append_row(header);
    }

    void add_row(const std::vector<std::string>& cells)
    {
        if (cells.size() != width_)
        {
            throw std::logic_error("csv_table: ragged row");
        }
        append_row(cells);
    }

    const std::string& text() const { return text_; }

private:
    void append_row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            if (i != 0)
            {
                text_ += ',';
            }
            text_ += quoted(cells[i]);
        }
        text_ += "\r\n";
    }

    static std::string quoted(const std::string& cell)
    {
        if (cell.find_first_of(",\"\r\n") == std::string::npos)
        {
            return cell;
        }
        std::string out = "\"";
        for (const char c : cell)
        {
            if (c == '"')
            {
                out += '"';
            }
            out += c;
        }
        out += '"';
        return out;
    }

    std::size_t width_;
    std::string text_;
};

/// 17 significant digits: round-trips a double exactly.
std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string count(long v) { return std::to_string(v); }

void write_output(const csv_table& table, const std::string& out_path)
{
    if (out_path.empty() || out_path == "-")
    {
        std::cout << table.text();
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
    {
        throw ppnet::config_error("out: cannot open '" + out_path
                                  + "' for writing");
    }
    out << table.text();
}

// ---------------------------------------------------------------------------
// Shared command plumbing
// ---------------------------------------------------------------------------

/// Which load models a command reports.
struct load_selection
{
    bool lm1 = true;
    bool lm2 = true;

    std::vector<ppnet::load_model> list() const
    {
        std::vector<ppnet::load_model> out;
        if (lm1)
        {
            out.push_back(ppnet::load_model::lm1);
        }
        if (lm2)
        {
            out.push_back(ppnet::load_model::lm2);
        }
        return out;
    }
};

const char* lm_name(ppnet::load_model load)
{
    return load == ppnet::load_model::lm1 ? "1" : "2";
}

const char* lm_tag(ppnet::load_model load)
{
    return load == ppnet::load_model::lm1 ? "lm1" : "lm2";
}

const char* clamp_name(ppnet::clamp_status s)
{
    switch (s)
    {
    case ppnet::clamp_status::interior:
        return "interior";
    case ppnet::clamp_status::at_p_min:
        return "at-p-min";
    case ppnet::clamp_status::at_p_max:
        return "at-p-max";
    case ppnet::clamp_status::at_lambda_min:
        return "at-lambda-min";
    case ppnet::clamp_status::at_lambda_max:
        return "at-lambda-max";
    case ppnet::clamp_status::multiple_clamps:
        return "multiple-clamps";
    }
    return "unknown";
}

/// Arguments shared by every subcommand.
struct common_args
{
    std::string config_path;
    std::string preset;
    std::string out_path = "-";
    std::uint64_t seed = 1;
    int load_model_flag = 0; // 0 = both
    long mc_realizations = 20000;
    double eps = 1e-6;
    std::vector<std::string> overrides;

    cli_config resolve_config() const
    {
        cli_config cfg;
        if (!preset.empty())
        {
            apply_preset(cfg, preset);
        }
        if (!config_path.empty())
        {
            load_config_file(cfg, config_path);
        }
        for (const std::string& item : overrides)
        {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
            {
                throw ppnet::config_error(
                    "override: expected key=value, got '" + item + "'");
            }
            apply_key(cfg, item.substr(0, eq), item.substr(eq + 1));
        }
        return cfg;
    }

    load_selection selection() const
    {
        load_selection sel;
        sel.lm1 = load_model_flag != 2;
        sel.lm2 = load_model_flag != 1;
        return sel;
    }
};

void add_common(CLI::App* sub, common_args& args)
{
    sub->add_option("--config", args.config_path,
                    "flat key=value configuration file");
    sub->add_option("--preset", args.preset,
                    "named parameter preset (sparse-rural)");
    sub->add_option("--out", args.out_path, "output CSV path ('-' = stdout)");
    sub->add_option("--seed", args.seed, "RNG seed for stochastic commands");
    sub->add_option("--load-model", args.load_model_flag,
                    "restrict output to one load model")
        ->check(CLI::IsMember({1, 2}));
    sub->add_option("--mc-realizations", args.mc_realizations,
                    "Monte Carlo realizations per campaign");
    sub->add_option("--eps", args.eps,
                    "relative EE stop for the alternating optimizer");
    sub->add_option("overrides", args.overrides,
                    "key=value configuration overrides");
}

/// Geometric grid between two positive endpoints (inclusive).
std::vector<double> log_grid(double from, double to, int points,
                             const char* what)
{
    if (!(from > 0.0) || !(to >= from) || points < 1)
    {
        throw ppnet::config_error(
            std::string(what)
            + ": requires 0 < from <= to and points >= 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
    {
        const double t =
            points == 1 ? 0.0
                        : static_cast<double>(i)
                              / static_cast<double>(points - 1);
        grid.push_back(from * std::pow(to / from, t));
    }
    return grid;
}

/// Linear grid between two endpoints (inclusive).
std::vector<double> linear_grid(double from, double to, int points,
                                const char* what)
{
    if (!std::isfinite(from) || !(to >= from) || points < 1)
    {
        throw ppnet::config_error(
            std::string(what) + ": requires from <= to and points >= 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
    {
        const double t =
            points == 1 ? 0.0
                        : static_cast<double>(i)
                              / static_cast<double>(points - 1);
        grid.push_back(from + (to - from) * t);
    }
    return grid;
}

/// Metric column block: coverage, PSE, then P_grid/EE per load model.
std::vector<std::string> metric_header(const load_selection& sel)
{
    std::vector<std::string> cols = {"coverage_prob",
                                     "pse_bit_per_s_per_m2"};
    for (const auto load : sel.list())
    {
        cols.push_back(std::string("p_grid_") + lm_tag(load) + "_w_per_m2");
        cols.push_back(std::string("ee_") + lm_tag(load) + "_bit_per_joule");
    }
    return cols;
}

/// Evaluates the metric block at one operating point; empty cells plus
/// a message on failure.
std::pair<std::vector<std::string>, std::string>
metric_cells(double p_tx_w, double lambda_bs, const converted_setup& setup,
             const load_selection& sel)
{
    std::vector<std::string> cells;
    try
    {
        ppnet::power_profile<double> power = setup.power;
        power.p_tx_w = p_tx_w;
        cells.push_back(num(
            ppnet::coverage_probability(p_tx_w, lambda_bs, setup.params)));
        cells.push_back(num(ppnet::pse(p_tx_w, lambda_bs, setup.params)));
        for (const auto load : sel.list())
        {
            cells.push_back(num(ppnet::power_grid(p_tx_w, lambda_bs,
                                                  setup.params, power,
                                                  load)));
            cells.push_back(num(ppnet::energy_efficiency(
                p_tx_w, lambda_bs, setup.params, power, load)));
        }
        return {cells, ""};
    }
    catch (const std::exception& e)
    {
        cells.assign(2 + 2 * sel.list().size(), "");
        return {cells, e.what()};
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

void run_eval(const common_args& common)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();

    std::vector<std::string> header = {
        "p_tx_dbm",      "p_tx_w",         "r_cell_m",
        "lambda_bs_per_m2", "lambda_mt_per_km2", "gamma_d_db",
        "gamma_a_db",    "beta"};
    const auto metrics = metric_header(sel);
    header.insert(header.end(), metrics.begin(), metrics.end());
    header.push_back("error");
    csv_table table(header);

    auto [cells, error] =
        metric_cells(setup.power.p_tx_w, setup.lambda_bs, setup, sel);
    std::vector<std::string> row = {num(cfg.p_tx_dbm),
                                    num(setup.power.p_tx_w),
                                    num(cfg.r_cell_m),
                                    num(setup.lambda_bs),
                                    num(cfg.lambda_mt_per_km2),
                                    num(cfg.gamma_d_db),
                                    num(cfg.gamma_a_db),
                                    num(cfg.beta)};
    row.insert(row.end(), cells.begin(), cells.end());
    row.push_back(error);
    table.add_row(row);
    write_output(table, common.out_path);
}

struct sweep_range
{
    double from = 0.0;
    double to = 0.0;
    int points = 0;
};

void run_sweep_power(const common_args& common, const sweep_range& range)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();

    std::vector<std::string> header = {"p_tx_dbm", "p_tx_w"};
    const auto metrics = metric_header(sel);
    header.insert(header.end(), metrics.begin(), metrics.end());
    header.push_back("error");
    csv_table table(header);

    for (const double dbm : linear_grid(range.from, range.to, range.points,
                                        "sweep-power grid"))
    {
        const double p = ppnet::dbm_to_watt(dbm);
        auto [cells, error] = metric_cells(p, setup.lambda_bs, setup, sel);
        std::vector<std::string> row = {num(dbm), num(p)};
        row.insert(row.end(), cells.begin(), cells.end());
        row.push_back(error);
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

void run_sweep_density(const common_args& common, const sweep_range& range)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();

    std::vector<std::string> header = {"r_cell_m", "lambda_bs_per_m2"};
    const auto metrics = metric_header(sel);
    header.insert(header.end(), metrics.begin(), metrics.end());
    header.push_back("error");
    csv_table table(header);

    for (const double r_cell : log_grid(range.from, range.to, range.points,
                                        "sweep-density grid"))
    {
        const double lambda_bs = ppnet::cell_radius_to_density(r_cell);
        auto [cells, error] =
            metric_cells(setup.power.p_tx_w, lambda_bs, setup, sel);
        std::vector<std::string> row = {num(r_cell), num(lambda_bs)};
        row.insert(row.end(), cells.begin(), cells.end());
        row.push_back(error);
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

void run_sweep_mt_density(const common_args& common, const sweep_range& range)
{
    const cli_config cfg = common.resolve_config();
    const load_selection sel = common.selection();

    std::vector<std::string> header = {"lambda_mt_per_km2",
                                       "lambda_mt_per_m2"};
    const auto metrics = metric_header(sel);
    header.insert(header.end(), metrics.begin(), metrics.end());
    header.push_back("error");
    csv_table table(header);

    for (const double per_km2 : log_grid(range.from, range.to, range.points,
                                         "sweep-mt-density grid"))
    {
        cli_config point_cfg = cfg;
        point_cfg.lambda_mt_per_km2 = per_km2;
        const converted_setup setup = convert_units(point_cfg);
        auto [cells, error] =
            metric_cells(setup.power.p_tx_w, setup.lambda_bs, setup, sel);
        std::vector<std::string> row = {
            num(per_km2), num(setup.params.lambda_mt)};
        row.insert(row.end(), cells.begin(), cells.end());
        row.push_back(error);
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

void run_sweep_threshold(const common_args& common, const sweep_range& range)
{
    const cli_config cfg = common.resolve_config();
    const load_selection sel = common.selection();

    std::vector<std::string> header = {"gamma_db", "gamma_linear"};
    const auto metrics = metric_header(sel);
    header.insert(header.end(), metrics.begin(), metrics.end());
    header.push_back("error");
    csv_table table(header);

    // Reliability sweep: both thresholds move together.
    for (const double db : linear_grid(range.from, range.to, range.points,
                                       "sweep-threshold grid"))
    {
        cli_config point_cfg = cfg;
        point_cfg.gamma_d_db = db;
        point_cfg.gamma_a_db = db;
        const converted_setup setup = convert_units(point_cfg);
        auto [cells, error] =
            metric_cells(setup.power.p_tx_w, setup.lambda_bs, setup, sel);
        std::vector<std::string> row = {num(db),
                                        num(setup.params.gamma_d)};
        row.insert(row.end(), cells.begin(), cells.end());
        row.push_back(error);
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

/// Box flags shared by the optimizing commands, in human units.
struct box_args
{
    double p_min_dbm = -20.0;
    double p_max_dbm = 60.0;
    double r_cell_min_m = 10.0;
    double r_cell_max_m = 2000.0;

    ppnet::optimization_bounds<double> bounds(double alt_eps) const
    {
        ppnet::optimization_bounds<double> b;
        b.p_min_w = ppnet::dbm_to_watt(p_min_dbm);
        b.p_max_w = ppnet::dbm_to_watt(p_max_dbm);
        // Small cells mean dense deployments: the radius box maps to
        // the density box with the endpoints swapped.
        b.lambda_min = ppnet::cell_radius_to_density(r_cell_max_m);
        b.lambda_max = ppnet::cell_radius_to_density(r_cell_min_m);
        b.alt_eps = alt_eps;
        return b;
    }
};

void add_box(CLI::App* sub, box_args& box)
{
    sub->add_option("--p-min-dbm", box.p_min_dbm,
                    "transmit-power box lower edge");
    sub->add_option("--p-max-dbm", box.p_max_dbm,
                    "transmit-power box upper edge");
    sub->add_option("--r-cell-min-m", box.r_cell_min_m,
                    "cell-radius box lower edge (density upper edge)");
    sub->add_option("--r-cell-max-m", box.r_cell_max_m,
                    "cell-radius box upper edge (density lower edge)");
}

void run_optimize(const common_args& common, const box_args& box,
                  const std::string& problem)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();
    const auto bounds = box.bounds(common.eps);
    bounds.validate();

    csv_table table({"load_model", "problem", "p_opt_dbm", "p_opt_w",
                     "r_cell_opt_m", "lambda_bs_opt_per_m2",
                     "ee_opt_bit_per_joule", "pse_opt_bit_per_s_per_m2",
                     "coverage_opt_prob", "p_grid_opt_w_per_m2",
                     "iterations_count", "status", "error"});

    for (const auto load : sel.list())
    {
        std::vector<std::string> row = {lm_name(load), problem};
        try
        {
            ppnet::optimum_report<double> rep;
            if (problem == "power")
            {
                rep = ppnet::optimal_power(setup.lambda_bs, setup.params,
                                           setup.power, load, bounds);
            }
            else if (problem == "density")
            {
                rep = ppnet::optimal_density(setup.power.p_tx_w,
                                             setup.params, setup.power,
                                             load, bounds);
            }
            else
            {
                const double lam0 =
                    std::clamp(setup.lambda_bs, bounds.lambda_min,
                               bounds.lambda_max);
                rep = ppnet::joint_optimize(setup.params, setup.power, load,
                                            bounds, lam0);
            }
            ppnet::power_profile<double> power = setup.power;
            power.p_tx_w = rep.p_opt_w;
            row.insert(row.end(),
                       {num(ppnet::watt_to_dbm(rep.p_opt_w)),
                        num(rep.p_opt_w),
                        num(ppnet::density_to_cell_radius(rep.lambda_opt)),
                        num(rep.lambda_opt), num(rep.ee_opt),
                        num(ppnet::pse(rep.p_opt_w, rep.lambda_opt,
                                       setup.params)),
                        num(ppnet::coverage_probability(
                            rep.p_opt_w, rep.lambda_opt, setup.params)),
                        num(ppnet::power_grid(rep.p_opt_w, rep.lambda_opt,
                                              setup.params, power, load)),
                        count(rep.iterations), clamp_name(rep.clamped),
                        ""});
        }
        catch (const std::exception& e)
        {
            row.insert(row.end(), 10, "");
            row.push_back(e.what());
        }
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

enum class tradeoff_axis
{
    threshold,
    mt_density
};

void run_tradeoff(const common_args& common, const box_args& box,
                  const sweep_range& range, tradeoff_axis axis)
{
    const cli_config cfg = common.resolve_config();
    const load_selection sel = common.selection();
    const auto bounds = box.bounds(common.eps);
    bounds.validate();

    // Each load model's curve is traced at its own jointly optimal
    // operating point per sweep value, so the curves live at different
    // PSE abscissas and may cross in the (PSE, EE) plane. The threshold
    // axis exhibits the characteristic crossing: the one-terminal
    // schedule buys PSE with ever harsher thresholds while its coverage
    // collapses, so its curve folds back, whereas the serve-all schedule
    // densifies (where both schedules converge) and keeps climbing the
    // PSE axis at a better EE.
    const bool thr = axis == tradeoff_axis::threshold;
    std::vector<std::string> header =
        thr ? std::vector<std::string>{"gamma_db", "gamma_linear"}
            : std::vector<std::string>{"lambda_mt_per_km2",
                                       "lambda_mt_per_m2"};
    for (const auto load : sel.list())
    {
        const std::string tag = lm_tag(load);
        header.push_back("pse_" + tag + "_bit_per_s_per_m2");
        header.push_back("ee_" + tag + "_bit_per_joule");
        header.push_back("p_opt_" + tag + "_dbm");
        header.push_back("r_cell_opt_" + tag + "_m");
    }
    header.push_back("error");
    csv_table table(header);

    const std::vector<double> grid =
        thr ? linear_grid(range.from, range.to, range.points,
                          "tradeoff grid")
            : log_grid(range.from, range.to, range.points, "tradeoff grid");
    for (const double x : grid)
    {
        cli_config point_cfg = cfg;
        if (thr)
        {
            point_cfg.gamma_d_db = x;
            point_cfg.gamma_a_db = x;
        }
        else
        {
            point_cfg.lambda_mt_per_km2 = x;
        }
        const converted_setup setup = convert_units(point_cfg);
        std::vector<std::string> row = {
            num(x),
            num(thr ? setup.params.gamma_d : setup.params.lambda_mt)};
        std::string error;
        for (const auto load : sel.list())
        {
            try
            {
                const double lam0 =
                    std::clamp(setup.lambda_bs, bounds.lambda_min,
                               bounds.lambda_max);
                const auto rep = ppnet::joint_optimize(
                    setup.params, setup.power, load, bounds, lam0);
                row.insert(
                    row.end(),
                    {num(ppnet::pse(rep.p_opt_w, rep.lambda_opt,
                                    setup.params)),
                     num(rep.ee_opt),
                     num(ppnet::watt_to_dbm(rep.p_opt_w)),
                     num(ppnet::density_to_cell_radius(rep.lambda_opt))});
            }
            catch (const std::exception& e)
            {
                row.insert(row.end(), 4, "");
                if (!error.empty())
                {
                    error += "; ";
                }
                error += std::string(lm_tag(load)) + ": " + e.what();
            }
        }
        row.push_back(error);
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

void run_mc_validate(const common_args& common)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();

    csv_table table(
        {"load_model", "n_count", "window_radius_m",
         "coverage_closed_prob", "coverage_mc_prob", "coverage_half_prob",
         "pse_closed_bit_per_s_per_m2", "pse_mc_bit_per_s_per_m2",
         "pse_half_bit_per_s_per_m2", "p_grid_closed_w_per_m2",
         "p_grid_mc_w_per_m2", "p_grid_half_w_per_m2",
         "ee_closed_bit_per_joule", "ee_mc_bit_per_joule",
         "ee_half_bit_per_joule", "resamples_count", "insufficient_flag",
         "error"});

    for (const auto load : sel.list())
    {
        std::vector<std::string> row = {lm_name(load)};
        try
        {
            ppnet::sim_config sim;
            sim.num_realizations = static_cast<int>(common.mc_realizations);
            sim.rng_seed = common.seed;
            const auto mc = ppnet::estimate_metrics(
                setup.power.p_tx_w, setup.lambda_bs, setup.params,
                setup.power, load, sim);
            row.insert(
                row.end(),
                {count(mc.coverage.n), num(mc.window_radius_m),
                 num(ppnet::coverage_probability(setup.power.p_tx_w,
                                                 setup.lambda_bs,
                                                 setup.params)),
                 num(mc.coverage.mean), num(mc.coverage.half_width),
                 num(ppnet::pse(setup.power.p_tx_w, setup.lambda_bs,
                                setup.params)),
                 num(mc.pse.mean), num(mc.pse.half_width),
                 num(ppnet::power_grid(setup.power.p_tx_w, setup.lambda_bs,
                                       setup.params, setup.power, load)),
                 num(mc.p_grid.mean), num(mc.p_grid.half_width),
                 num(ppnet::energy_efficiency(setup.power.p_tx_w,
                                              setup.lambda_bs, setup.params,
                                              setup.power, load)),
                 num(mc.ee.mean), num(mc.ee.half_width),
                 count(mc.resample_total),
                 mc.insufficient_samples ? "1" : "0", ""});
        }
        catch (const std::exception& e)
        {
            row.insert(row.end(), 16, "");
            row.push_back(e.what());
        }
        table.add_row(row);
    }
    write_output(table, common.out_path);
}

void run_convergence_study(const common_args& common, const box_args& box,
                           long trials, std::vector<double> eps_values)
{
    const cli_config cfg = common.resolve_config();
    const converted_setup setup = convert_units(cfg);
    const load_selection sel = common.selection();
    if (trials < 1)
    {
        throw ppnet::config_error(
            "convergence-study: trials must be >= 1");
    }
    std::sort(eps_values.begin(), eps_values.end());

    // One log-uniform initial density per trial, shared across every
    // (eps, load model) pair so the comparison is paired.
    const auto base_bounds = box.bounds(1e-6);
    std::vector<double> initial_lambdas;
    initial_lambdas.reserve(static_cast<std::size_t>(trials));
    for (long trial = 0; trial < trials; ++trial)
    {
        std::seed_seq seq{
            static_cast<std::uint32_t>(common.seed),
            static_cast<std::uint32_t>(common.seed >> 32),
            static_cast<std::uint32_t>(trial),
            static_cast<std::uint32_t>(0x9e3779b9)};
        std::mt19937_64 eng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        initial_lambdas.push_back(
            base_bounds.lambda_min
            * std::pow(base_bounds.lambda_max / base_bounds.lambda_min,
                       unit(eng)));
    }

    csv_table table({"eps_rel", "load_model", "trials_count",
                     "mean_iterations_count", "error"});
    for (const double eps : eps_values)
    {
        for (const auto load : sel.list())
        {
            std::vector<std::string> row = {num(eps), lm_name(load)};
            try
            {
                const auto bounds = box.bounds(eps);
                bounds.validate();
                double total_iterations = 0.0;
                for (const double lam0 : initial_lambdas)
                {
                    const auto rep = ppnet::joint_optimize(
                        setup.params, setup.power, load, bounds, lam0);
                    total_iterations += rep.iterations;
                }
                row.insert(row.end(),
                           {count(trials),
                            num(total_iterations
                                / static_cast<double>(trials)),
                            ""});
            }
            catch (const std::exception& e)
            {
                row.insert(row.end(), 2, "");
                row.push_back(e.what());
            }
            table.add_row(row);
        }
    }
    write_output(table, common.out_path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "Coverage, spectral-efficiency, power, and energy-efficiency "
        "analysis of PPP cellular networks: closed forms, optimizers, and "
        "a Monte Carlo validator, emitting deterministic CSV."};
    app.require_subcommand(1);

    try
    {
        common_args eval_args;
        auto* eval = app.add_subcommand(
            "eval", "evaluate all metrics at one operating point");
        add_common(eval, eval_args);
        eval->callback([&] { run_eval(eval_args); });

        common_args sp_args;
        sweep_range sp_range{-20.0, 60.0, 81};
        auto* sweep_power = app.add_subcommand(
            "sweep-power", "sweep the transmit power (dBm grid)");
        add_common(sweep_power, sp_args);
        sweep_power->add_option("--from-dbm", sp_range.from, "grid start");
        sweep_power->add_option("--to-dbm", sp_range.to, "grid end");
        sweep_power->add_option("--points", sp_range.points, "grid size");
        sweep_power->callback([&] { run_sweep_power(sp_args, sp_range); });

        common_args sd_args;
        sweep_range sd_range{50.0, 2000.0, 61};
        auto* sweep_density = app.add_subcommand(
            "sweep-density", "sweep the cell radius (log grid, metres)");
        add_common(sweep_density, sd_args);
        sweep_density->add_option("--from-m", sd_range.from, "grid start");
        sweep_density->add_option("--to-m", sd_range.to, "grid end");
        sweep_density->add_option("--points", sd_range.points, "grid size");
        sweep_density->callback(
            [&] { run_sweep_density(sd_args, sd_range); });

        common_args sm_args;
        sweep_range sm_range{1.0, 10000.0, 61};
        auto* sweep_mt = app.add_subcommand(
            "sweep-mt-density",
            "sweep the terminal density (log grid, per km^2)");
        add_common(sweep_mt, sm_args);
        sweep_mt->add_option("--from-per-km2", sm_range.from, "grid start");
        sweep_mt->add_option("--to-per-km2", sm_range.to, "grid end");
        sweep_mt->add_option("--points", sm_range.points, "grid size");
        sweep_mt->callback(
            [&] { run_sweep_mt_density(sm_args, sm_range); });

        common_args st_args;
        sweep_range st_range{-5.0, 15.0, 41};
        auto* sweep_threshold = app.add_subcommand(
            "sweep-threshold",
            "sweep the reliability thresholds together (dB grid)");
        add_common(sweep_threshold, st_args);
        sweep_threshold->add_option("--from-db", st_range.from,
                                    "grid start");
        sweep_threshold->add_option("--to-db", st_range.to, "grid end");
        sweep_threshold->add_option("--points", st_range.points,
                                    "grid size");
        sweep_threshold->callback(
            [&] { run_sweep_threshold(st_args, st_range); });

        common_args opt_args;
        box_args opt_box;
        std::string problem = "joint";
        auto* optimize = app.add_subcommand(
            "optimize", "solve for the EE-optimal operating point");
        add_common(optimize, opt_args);
        add_box(optimize, opt_box);
        optimize
            ->add_option("--problem", problem,
                         "power | density | joint (default joint)")
            ->check(CLI::IsMember({"power", "density", "joint"}));
        optimize->callback(
            [&] { run_optimize(opt_args, opt_box, problem); });

        common_args to_args;
        box_args to_box;
        std::string to_axis = "threshold";
        sweep_range to_thr{-5.0, 30.0, 36};
        sweep_range to_mt{1.0, 10000.0, 40};
        int to_points = 0;
        auto* tradeoff = app.add_subcommand(
            "tradeoff",
            "EE vs PSE at each load model's own joint optimum, swept over "
            "the reliability threshold (default) or the terminal density");
        add_common(tradeoff, to_args);
        add_box(tradeoff, to_box);
        tradeoff
            ->add_option("--sweep", to_axis,
                         "threshold | mt-density (default threshold)")
            ->check(CLI::IsMember({"threshold", "mt-density"}));
        tradeoff->add_option("--from-db", to_thr.from,
                             "threshold grid start (dB)");
        tradeoff->add_option("--to-db", to_thr.to,
                             "threshold grid end (dB)");
        tradeoff->add_option("--from-per-km2", to_mt.from,
                             "terminal-density grid start");
        tradeoff->add_option("--to-per-km2", to_mt.to,
                             "terminal-density grid end");
        tradeoff->add_option("--points", to_points,
                             "grid size (default 36 / 40 per axis)");
        tradeoff->callback([&] {
            const bool thr_axis = to_axis == "threshold";
            sweep_range range = thr_axis ? to_thr : to_mt;
            if (to_points > 0)
            {
                range.points = to_points;
            }
            run_tradeoff(to_args, to_box, range,
                         thr_axis ? tradeoff_axis::threshold
                                  : tradeoff_axis::mt_density);
        });

        common_args mc_args;
        auto* mc_validate = app.add_subcommand(
            "mc-validate",
            "closed forms vs an independent Monte Carlo campaign");
        add_common(mc_validate, mc_args);
        mc_validate->callback([&] { run_mc_validate(mc_args); });

        common_args cs_args;
        box_args cs_box;
        long trials = 1000;
        std::vector<double> eps_values = {1e-8, 1e-6, 1e-4, 1e-2};
        auto* convergence = app.add_subcommand(
            "convergence-study",
            "mean alternating-optimizer iterations per stop tolerance");
        add_common(convergence, cs_args);
        add_box(convergence, cs_box);
        convergence->add_option("--trials", trials,
                                "random initial guesses per tolerance");
        convergence->add_option("--eps-values", eps_values,
                                "stop tolerances to study");
        convergence->callback(
            [&] { run_convergence_study(cs_args, cs_box, trials,
                                        eps_values); });

        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e);
    }
    catch (const ppnet::config_error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
