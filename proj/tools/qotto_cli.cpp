// Command-line front end: parameter echo, xi(tau) sweeps, single-cycle
// ledgers, efficiency sweeps, region maps, the TLS/HO comparison,
// work maximization, and the seeded verification harness.
//
// Exit codes: 0 success, 2 validation error, 3 non-convergence,
// 4 verification failure.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qotto/cycle.hpp"
#include "qotto/drive.hpp"
#include "qotto/io.hpp"
#include "qotto/optimize.hpp"
#include "qotto/params.hpp"
#include "qotto/sweep.hpp"
#include "qotto/thermo.hpp"

namespace {

struct CommonOpts {
    double freq_c_khz = 2.5;
    double omega_ratio = 10.0;
    double energy_scale_pev = 10.0;
    double beta_ratio = 0.7;
    double r = 0.0;
    std::string out;
    std::string format = "csv";
};

// Shared engine/output flags live on the root app; subcommands fall
// through to it, so the flags work both before and after the
// subcommand name and flat config keys resolve against them.
void add_common(CLI::App& app, CommonOpts& o) {
    app.add_option("--freq-c-khz", o.freq_c_khz, "cold ordinary frequency in kHz");
    app.add_option("--omega-ratio", o.omega_ratio, "omega_h / omega_c");
    app.add_option("--energy-scale-pev", o.energy_scale_pev, "1/beta_c in peV");
    app.add_option("--beta-ratio", o.beta_ratio, "beta_h / beta_c");
    app.add_option("--r", o.r, "squeezing parameter");
    app.add_option("--out", o.out, "output path ('-' or empty for stdout)");
    app.add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

qotto::EngineParams engine_params(const CommonOpts& o) {
    return qotto::from_lab_units(o.freq_c_khz, o.omega_ratio, o.energy_scale_pev,
                                 o.beta_ratio, o.r);
}

void emit(const nlohmann::json& obj, const CommonOpts& o) {
    // Scalar results are always emitted as JSON; --format governs tables.
    const std::string payload = obj.dump(2) + "\n";
    if (o.out.empty() || o.out == "-") {
        std::fputs(payload.c_str(), stdout);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw qotto::ValidationError("cannot open output file: " + o.out);
        f << payload;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level quantum Otto engine with a squeezed hot reservoir"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");
    app.allow_config_extras(CLI::config_extras_mode::ignore);

    CommonOpts o;
    add_common(app, o);

    auto* cmd_params = app.add_subcommand("params", "echo derived dimensionless parameters");
    cmd_params->fallthrough();

    auto* cmd_xi = app.add_subcommand("xi", "adiabaticity parameter xi over a tau grid");
    cmd_xi->fallthrough();
    std::string grid_tau_ms = "0.01:2.0:0.01";
    cmd_xi->add_option("--tau-ms", grid_tau_ms, "tau grid in ms, min:max:step");

    auto* cmd_cycle = app.add_subcommand("cycle", "run one engine cycle and print the ledger");
    cmd_cycle->fallthrough();
    std::optional<double> cyc_xi, cyc_tau_ms, t_thermal_s;
    cmd_cycle->add_option("--xi", cyc_xi, "adiabaticity parameter (synthetic unitary)");
    cmd_cycle->add_option("--tau-ms", cyc_tau_ms, "drive duration in ms (integrated unitary)");
    cmd_cycle->add_option("--t-thermal-s", t_thermal_s,
                          "thermal-contact time for the auxiliary work-rate column");

    auto* cmd_esweep = app.add_subcommand("efficiency-sweep", "efficiency over an (r, xi) grid");
    cmd_esweep->fallthrough();
    std::string esweep_mode = "fixed_frequencies_exact";
    std::string grid_r = "0:3:0.01";
    std::vector<double> xi_list;
    cmd_esweep->add_option("--mode", esweep_mode, "optimized_highT or fixed_frequencies_exact")
        ->check(CLI::IsMember({"optimized_highT", "fixed_frequencies_exact"}));
    cmd_esweep->add_option("--grid-r", grid_r, "r grid, min:max:step");
    cmd_esweep->add_option("--xi", xi_list, "xi values (repeatable)");

    auto* cmd_region = app.add_subcommand("region-map", "operating-regime map over (r, xi)");
    cmd_region->fallthrough();
    std::string region_grid_r = "0:3:0.01";
    std::string region_grid_xi = "0:0.49:0.01";
    cmd_region->add_option("--grid-r", region_grid_r, "r grid, min:max:step");
    cmd_region->add_option("--grid-xi", region_grid_xi, "xi grid, min:max:step");

    auto* cmd_ho = app.add_subcommand("compare-ho", "quasi-static TLS vs HO efficiencies");
    cmd_ho->fallthrough();
    std::string ho_grid_r = "0:3:0.01";
    cmd_ho->add_option("--grid-r", ho_grid_r, "r grid, min:max:step");

    auto* cmd_opt = app.add_subcommand("optimize", "maximize extracted work over omega_h");
    cmd_opt->fallthrough();
    double opt_xi = 0.0, ratio_cap = 100.0;
    cmd_opt->add_option("--xi", opt_xi, "adiabaticity parameter");
    cmd_opt->add_option("--ratio-cap", ratio_cap, "upper bound on omega_h/omega_c");

    auto* cmd_verify = app.add_subcommand("verify", "seeded oracle-equivalence check");
    cmd_verify->fallthrough();
    std::int64_t draws = 1000;
    std::uint64_t seed = 1;
    cmd_verify->add_option("--draws", draws, "number of random parameter draws");
    cmd_verify->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);

        if (cmd_params->parsed()) {
            const qotto::EngineParams p = engine_params(o);
            const qotto::DerivedParams d = qotto::derive(p);
            nlohmann::json j{{"omega_c_rad_s", p.omega_c}, {"omega_h_rad_s", p.omega_h},
                             {"beta_c_inv_pev", p.beta_c}, {"beta_h_inv_pev", p.beta_h},
                             {"r", p.r},           {"theta_c", d.theta_c},
                             {"theta_h", d.theta_h}, {"zeta", d.zeta},
                             {"mu", d.mu},         {"nu", d.nu},
                             {"xi_max", qotto::xi_max(p)},
                             {"eta_carnot", qotto::carnot(p)}};
            if (qotto::has_inverted_temperature_order(p))
                j["warning"] = "beta_h >= beta_c; extraction is governed by xi_max";
            emit(j, o);
        } else if (cmd_xi->parsed()) {
            const qotto::EngineParams p = engine_params(o);
            auto tau_ms = qotto::grid_points(qotto::parse_grid(grid_tau_ms));
            for (double& t : tau_ms) t *= 1e-3;
            qotto::write_table(qotto::adiabaticity_sweep(p.omega_c, p.omega_h, tau_ms),
                               o.out, o.format);
        } else if (cmd_cycle->parsed()) {
            const qotto::EngineParams p = engine_params(o);
            if (cyc_xi.has_value() == cyc_tau_ms.has_value())
                throw qotto::ValidationError("cycle: give exactly one of --xi or --tau-ms");
            qotto::Mat2 u;
            double xi;
            if (cyc_xi) {
                u = qotto::synthetic_unitary(*cyc_xi, 0.0);
                xi = *cyc_xi;
            } else {
                const qotto::DriveSchedule s{p.omega_c, p.omega_h, *cyc_tau_ms * 1e-3};
                const qotto::XiResult xr = qotto::adiabaticity_xi(s);
                u = qotto::propagate(s, xr.steps_used).u;
                xi = xr.xi;
            }
            const qotto::CycleLedger L = qotto::run_cycle(p, u);
            nlohmann::json j{{"xi_effective", L.xi_effective},
                             {"q_hot_pev", L.q_hot},
                             {"q_cold_pev", L.q_cold},
                             {"w_expansion_pev", L.w_expansion},
                             {"w_compression_pev", L.w_compression},
                             {"w_net_pev", L.w_net},
                             {"xi_max", qotto::xi_max(p)},
                             {"extracting", L.w_net < 0.0}};
            if (xi < qotto::xi_max(p)) j["eta"] = qotto::efficiency(p, xi);
            if (cyc_tau_ms && L.w_net < 0.0) {
                // Crude auxiliary figure: work rate per total stroke time.
                const double tt = t_thermal_s.value_or(0.0);
                j["work_per_drive_time_pev_per_s"] =
                    -L.w_net / (2.0 * (*cyc_tau_ms * 1e-3) + tt);
            }
            emit(j, o);
        } else if (cmd_esweep->parsed()) {
            const qotto::EngineParams p = engine_params(o);
            const auto r_grid = qotto::grid_points(qotto::parse_grid(grid_r));
            const auto mode = esweep_mode == "optimized_highT"
                                  ? qotto::SweepMode::optimized_highT
                                  : qotto::SweepMode::fixed_frequencies_exact;
            if (xi_list.empty())
                xi_list = mode == qotto::SweepMode::optimized_highT
                              ? std::vector<double>{0.0, 0.15, 0.3, 0.4}
                              : std::vector<double>{0.0, 0.1, 0.2, 0.3};
            qotto::write_table(qotto::efficiency_sweep(p, o.beta_ratio, r_grid, xi_list, mode),
                               o.out, o.format);
        } else if (cmd_region->parsed()) {
            const auto r_grid = qotto::grid_points(qotto::parse_grid(region_grid_r));
            const auto xi_grid = qotto::grid_points(qotto::parse_grid(region_grid_xi));
            qotto::write_table(
                qotto::region_map_table(qotto::region_map(o.beta_ratio, r_grid, xi_grid)),
                o.out, o.format);
        } else if (cmd_ho->parsed()) {
            const auto r_grid = qotto::grid_points(qotto::parse_grid(ho_grid_r));
            qotto::write_table(qotto::ho_comparison(o.beta_ratio, r_grid), o.out, o.format);
        } else if (cmd_opt->parsed()) {
            const qotto::EngineParams p = engine_params(o);
            const qotto::OptResult res = qotto::numeric_max_work(p, opt_xi, ratio_cap);
            nlohmann::json j{{"found", res.found}};
            if (res.found) {
                j["ratio_omega_c_over_omega_h"] = res.ratio;
                j["omega_h_star_rad_s"] = res.omega_h_star;
                j["w_net_star_pev"] = res.w_net_star;
                if (res.eta_star) j["eta_star"] = *res.eta_star;
                j["ratio_highT_closed_form"] =
                    qotto::opt_ratio_highT(o.beta_ratio, o.r, opt_xi);
            }
            emit(j, o);
        } else if (cmd_verify->parsed()) {
            const qotto::VerifyReport rep = qotto::verify(draws, seed);
            std::fputs(rep.text.c_str(), stdout);
            if (!rep.pass) return 4;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qotto::ConvergenceError& e) {
        std::fprintf(stderr, "error: %s (last estimates %.12g, %.12g)\n", e.what(),
                     e.penultimate_estimate, e.last_estimate);
        return 3;
    } catch (const qotto::NotFoundError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
