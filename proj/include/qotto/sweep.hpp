#ifndef QOTTO_SWEEP_HPP
#define QOTTO_SWEEP_HPP

// Parameter sweeps and region maps behind the CLI: the (r, xi)
// operating-regime classification, optimized- and exact-efficiency
// sweeps, the TLS/HO comparison, the xi(tau) sweep, and the seeded
// oracle-equivalence verification harness.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qotto/cycle.hpp"
#include "qotto/drive.hpp"
#include "qotto/io.hpp"
#include "qotto/optimize.hpp"
#include "qotto/params.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

enum class Regime { no_work, engine_below_carnot, engine_above_carnot };

inline std::string to_string(Regime c) {
    switch (c) {
        case Regime::no_work: return "no_work";
        case Regime::engine_below_carnot: return "engine_below_carnot";
        case Regime::engine_above_carnot: return "engine_above_carnot";
    }
    return "?";
}

struct RegionCell {
    double r;
    double xi;
    Regime regime;
    std::optional<double> eta_opt;
};

// Classify each (r, xi) cell by the optimized high-temperature
// efficiency at the maximum-work frequency ratio, against Carnot.
inline std::vector<RegionCell> region_map(double beta_ratio,
                                          const std::vector<double>& r_grid,
                                          const std::vector<double>& xi_grid) {
    if (r_grid.empty() || xi_grid.empty()) throw ValidationError("region_map: empty grid");
    const double eta_c = 1.0 - beta_ratio;
    std::vector<RegionCell> cells;
    cells.reserve(r_grid.size() * xi_grid.size());
    for (double xi : xi_grid) {
        if (!(xi >= 0.0 && xi < 0.5))
            throw ValidationError("region_map: xi grid must lie in [0, 1/2)");
        for (double r : r_grid) {
            RegionCell cell{r, xi, Regime::no_work, std::nullopt};
            const double ratio = opt_ratio_highT(beta_ratio, r, xi);
            if (ratio < 1.0) {
                const double eta = opt_eff_tls(beta_ratio, r, xi);
                if (eta > 0.0) {
                    cell.eta_opt = eta;
                    cell.regime = eta > eta_c ? Regime::engine_above_carnot
                                              : Regime::engine_below_carnot;
                }
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

inline Table region_map_table(const std::vector<RegionCell>& cells) {
    Table t;
    t.columns = {"r", "xi", "classification", "eta_opt"};
    for (const auto& c : cells) {
        std::vector<Cell> row{c.r, c.xi, to_string(c.regime), std::monostate{}};
        if (c.eta_opt) row[3] = *c.eta_opt;
        t.rows.push_back(std::move(row));
    }
    return t;
}

enum class SweepMode { optimized_highT, fixed_frequencies_exact };

// Rows (r, xi, eta, eta_carnot, extracting). In optimized mode eta is
// the high-temperature optimized efficiency; in exact mode it is the
// finite-time efficiency at the fixed frequency pair, absent outside
// the extraction regime.
inline Table efficiency_sweep(const EngineParams& base, double beta_ratio,
                              const std::vector<double>& r_grid,
                              const std::vector<double>& xi_list, SweepMode mode) {
    if (r_grid.empty() || xi_list.empty())
        throw ValidationError("efficiency_sweep: empty grid");
    Table t;
    t.columns = {"r", "xi", "eta", "eta_carnot", "extracting"};
    const double eta_c = 1.0 - beta_ratio;
    for (double xi : xi_list) {
        for (double r : r_grid) {
            std::vector<Cell> row{r, xi, std::monostate{}, eta_c, 0.0};
            if (mode == SweepMode::optimized_highT) {
                if (xi < 0.5 && opt_ratio_highT(beta_ratio, r, xi) < 1.0) {
                    const double eta = opt_eff_tls(beta_ratio, r, xi);
                    if (eta > 0.0) {
                        row[2] = eta;
                        row[4] = 1.0;
                    }
                }
            } else {
                EngineParams p = base;
                p.r = r;
                if (xi < xi_max(p)) {
                    row[2] = efficiency(p, xi);
                    row[4] = 1.0;
                }
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

// Rows (r, eta_tls_qs, eta_ho_qs, eta_carnot), quasi-static forms.
inline Table ho_comparison(double beta_ratio, const std::vector<double>& r_grid) {
    if (r_grid.empty()) throw ValidationError("ho_comparison: empty grid");
    Table t;
    t.columns = {"r", "eta_tls_qs", "eta_ho_qs", "eta_carnot"};
    for (double r : r_grid) {
        t.rows.push_back({r, opt_eff_tls_quasistatic(beta_ratio, r),
                          opt_eff_ho_quasistatic(beta_ratio, r), 1.0 - beta_ratio});
    }
    return t;
}

// Rows (tau_s, xi, steps_used, converged); a non-converged cell is a
// flagged row, not an abort.
inline Table adiabaticity_sweep(double omega_c, double omega_h,
                                const std::vector<double>& tau_grid) {
    if (tau_grid.empty()) throw ValidationError("adiabaticity_sweep: empty grid");
    Table t;
    t.columns = {"tau_s", "xi", "steps_used", "converged"};
    for (double tau : tau_grid) {
        try {
            const XiResult x = adiabaticity_xi(DriveSchedule{omega_c, omega_h, tau});
            t.rows.push_back({tau, x.xi, static_cast<double>(x.steps_used),
                              x.converged ? 1.0 : 0.0});
        } catch (const ConvergenceError& e) {
            t.rows.push_back({tau, e.last_estimate,
                              static_cast<double>(XI_STEPS_CAP), 0.0});
        }
    }
    return t;
}

struct VerifyReport {
    bool pass = false;
    double max_dev_q_hot = 0.0;
    double max_dev_q_cold = 0.0;
    double max_dev_w_net = 0.0;
    double max_dev_eta = 0.0;
    std::int64_t draws = 0;
    std::string text;
};

// Seeded random-draw comparison of the density-matrix ledger against
// the closed-form heats, work, and efficiency.
inline VerifyReport verify(std::int64_t draws, std::uint64_t seed, double tol = 1e-9) {
    if (draws < 1) throw ValidationError("verify: draws must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    VerifyReport rep;
    rep.draws = draws;
    const double xi_values[] = {0.0, 0.1, 0.25, 0.4};
    for (std::int64_t i = 0; i < draws; ++i) {
        EngineParams p;
        p.omega_c = std::exp(std::log(1e3) + u01(rng) * (std::log(1e5) - std::log(1e3)));
        p.omega_h = p.omega_c * (1.1 + 19.0 * u01(rng));
        p.beta_c = 0.01 + 0.99 * u01(rng);
        p.beta_h = p.beta_c * (0.1 + 1.9 * u01(rng));
        p.r = 3.0 * u01(rng);
        const double phase = 6.283185307179586 * u01(rng);
        for (double xi : xi_values) {
            const CycleLedger L = run_cycle(p, synthetic_unitary(xi, phase));
            const double scale =
                std::max({std::abs(L.q_hot), std::abs(L.q_cold), std::abs(L.w_expansion),
                          std::abs(L.w_compression), 1e-300});
            rep.max_dev_q_hot =
                std::max(rep.max_dev_q_hot, std::abs(L.q_hot - heat_hot(p, xi)) / scale);
            rep.max_dev_q_cold =
                std::max(rep.max_dev_q_cold, std::abs(L.q_cold - heat_cold(p, xi)) / scale);
            rep.max_dev_w_net =
                std::max(rep.max_dev_w_net, std::abs(L.w_net - work_net(p, xi)) / scale);
            if (xi < xi_max(p)) {
                const double eta_ledger = -L.w_net / L.q_hot;
                rep.max_dev_eta = std::max(
                    rep.max_dev_eta, std::abs(eta_ledger - efficiency(p, xi)));
            }
        }
    }
    rep.pass = rep.max_dev_q_hot <= tol && rep.max_dev_q_cold <= tol &&
               rep.max_dev_w_net <= tol && rep.max_dev_eta <= tol;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "draws=%lld seed-deterministic ledger-vs-closed-form deviations:\n"
                  "  q_hot  max rel dev: %.6e\n"
                  "  q_cold max rel dev: %.6e\n"
                  "  w_net  max rel dev: %.6e\n"
                  "  eta    max abs dev: %.6e\n"
                  "result: %s\n",
                  static_cast<long long>(draws), rep.max_dev_q_hot, rep.max_dev_q_cold,
                  rep.max_dev_w_net, rep.max_dev_eta, rep.pass ? "PASS" : "FAIL");
    rep.text = buf;
    return rep;
}

} // namespace qotto

#endif
