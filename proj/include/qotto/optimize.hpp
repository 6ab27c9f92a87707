#ifndef QOTTO_OPTIMIZE_HPP
#define QOTTO_OPTIMIZE_HPP

// Maximum-extracted-work operating points: high-temperature closed
// forms, the harmonic-oscillator quasi-static baseline, and an exact
// numeric maximizer over the hot frequency.

#include <cmath>
#include <cstdint>
#include <optional>

#include "qotto/params.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

// omega_c/omega_h = 2 zeta b / [(1-2xi)(1 + zeta b)], b = beta_h/beta_c.
inline double opt_ratio_highT(double beta_ratio, double r, double xi) {
    if (!(beta_ratio > 0.0)) throw ValidationError("opt_ratio_highT: beta_ratio must be positive");
    if (!(r >= 0.0)) throw ValidationError("opt_ratio_highT: r must be non-negative");
    if (!(xi >= 0.0 && xi < 0.5))
        throw OutOfDomainError("opt_ratio_highT: xi must lie in [0, 1/2)");
    const double x = squeezing_factor(r) * beta_ratio;
    return 2.0 * x / ((1.0 - 2.0 * xi) * (1.0 + x));
}

// Optimized efficiency at the high-temperature maximum-work ratio.
inline double opt_eff_tls(double beta_ratio, double r, double xi) {
    const double ratio = opt_ratio_highT(beta_ratio, r, xi);
    if (ratio >= 1.0)
        throw OutOfDomainError("opt_eff_tls: optimal frequency ratio reaches 1; no engine regime");
    const double x = squeezing_factor(r) * beta_ratio;
    const double q = (1.0 - 2.0 * xi) * (1.0 - 2.0 * xi);
    return 1.0 - 2.0 * x * (2.0 - q * (1.0 + x)) / (q * (1.0 - x * x));
}

// Quasi-static limit: 1 - 2x/(1+x).
inline double opt_eff_tls_quasistatic(double beta_ratio, double r) {
    if (!(beta_ratio > 0.0))
        throw ValidationError("opt_eff_tls_quasistatic: beta_ratio must be positive");
    if (!(r >= 0.0)) throw ValidationError("opt_eff_tls_quasistatic: r must be non-negative");
    const double x = squeezing_factor(r) * beta_ratio;
    return 1.0 - 2.0 * x / (1.0 + x);
}

// Harmonic-oscillator baseline: 1 - sqrt(zeta beta_h/beta_c).
inline double opt_eff_ho_quasistatic(double beta_ratio, double r) {
    if (!(beta_ratio > 0.0))
        throw ValidationError("opt_eff_ho_quasistatic: beta_ratio must be positive");
    if (!(r >= 0.0)) throw ValidationError("opt_eff_ho_quasistatic: r must be non-negative");
    const double x = squeezing_factor(r) * beta_ratio;
    if (x > 1.0)
        throw OutOfDomainError("opt_eff_ho_quasistatic: zeta*beta_ratio exceeds 1");
    return 1.0 - std::sqrt(x);
}

struct OptResult {
    bool found = false;
    double ratio = 0.0;        // omega_c / omega_h at the optimum
    double omega_h_star = 0.0; // rad/s
    double w_net_star = 0.0;   // peV, negative when work is extracted
    std::optional<double> eta_star;
};

// Maximize extracted work over omega_h in (omega_c, ratio_cap*omega_c]
// at fixed omega_c, betas, r, xi. Grid bracket then golden-section.
inline OptResult numeric_max_work(const EngineParams& base, double xi, double ratio_cap) {
    if (!(xi >= 0.0 && xi < 0.5))
        throw OutOfDomainError("numeric_max_work: xi must lie in [0, 1/2)");
    if (!(ratio_cap > 1.0)) throw ValidationError("numeric_max_work: ratio_cap must exceed 1");

    auto objective = [&](double omega_h) { // net work; minimize
        EngineParams p = base;
        p.omega_h = omega_h;
        return work_net(p, xi);
    };

    const int n_grid = 1024;
    const double lo = base.omega_c;
    const double hi = ratio_cap * base.omega_c;
    int best = -1;
    double best_w = 0.0;
    for (int k = 1; k <= n_grid; ++k) {
        const double omega_h = lo + (hi - lo) * static_cast<double>(k) / n_grid;
        const double w = objective(omega_h);
        // Tie-break toward the smallest omega_h at plateaus.
        if (w < best_w) {
            best_w = w;
            best = k;
        }
    }
    OptResult res;
    if (best < 0) return res; // no extraction anywhere in range

    double a = lo + (hi - lo) * static_cast<double>(best - 1) / n_grid;
    double b = lo + (hi - lo) * static_cast<double>(std::min(best + 1, n_grid)) / n_grid;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-10 * b) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = objective(d);
        }
    }
    const double omega_star = 0.5 * (a + b);
    res.found = true;
    res.omega_h_star = omega_star;
    res.ratio = base.omega_c / omega_star;
    res.w_net_star = objective(omega_star);
    EngineParams p = base;
    p.omega_h = omega_star;
    if (xi < xi_max(p)) res.eta_star = efficiency(p, xi);
    return res;
}

} // namespace qotto

#endif
