#ifndef QOTTO_THERMO_HPP
#define QOTTO_THERMO_HPP

// Closed-form cycle thermodynamics: heats, net work, the
// work-extraction gate on xi, efficiency, and the Carnot baseline.
//
// Net work is taken as -(Q_h + Q_c); its xi term therefore reads
// hbar xi (omega_h tanh theta_c + zeta omega_c tanh theta_h), the
// form consistent with the extraction gate and with energy
// conservation across the cycle.

#include <cmath>
#include <optional>

#include "qotto/params.hpp"

namespace qotto {

struct CycleThermo {
    double q_hot;    // peV, >0 when absorbed from the hot reservoir
    double q_cold;   // peV
    double w_net;    // peV, <0 when extracted
    double xi_max;   // extraction gate
    bool extracting;
    bool above_carnot;
    std::optional<double> eta; // defined only when extracting
};

inline double heat_hot(const EngineParams& p, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) throw ValidationError("heat_hot: xi must lie in [0, 1]");
    const DerivedParams d = derive(p);
    return 0.5 * HBAR_PEV_S * p.omega_h * (std::tanh(d.theta_c) - d.zeta * std::tanh(d.theta_h)) -
           HBAR_PEV_S * xi * p.omega_h * std::tanh(d.theta_c);
}

inline double heat_cold(const EngineParams& p, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) throw ValidationError("heat_cold: xi must lie in [0, 1]");
    const DerivedParams d = derive(p);
    return -0.5 * HBAR_PEV_S * p.omega_c * (std::tanh(d.theta_c) - d.zeta * std::tanh(d.theta_h)) -
           HBAR_PEV_S * xi * d.zeta * p.omega_c * std::tanh(d.theta_h);
}

inline double work_net(const EngineParams& p, double xi) {
    return -(heat_hot(p, xi) + heat_cold(p, xi));
}

// Largest xi admitting work extraction; non-positive when
// zeta tanh theta_h >= tanh theta_c (no extraction at any xi >= 0).
inline double xi_max(const EngineParams& p) {
    const DerivedParams d = derive(p);
    const double tc = std::tanh(d.theta_c);
    const double th = std::tanh(d.theta_h);
    return (p.omega_h - p.omega_c) * (tc - d.zeta * th) /
           (2.0 * (p.omega_h * tc + d.zeta * p.omega_c * th));
}

// eta = 1 - (omega_c/omega_h) (1 + 2 xi F)/(1 - 2 xi G); equals
// -w_net/q_hot inside the extraction regime.
inline double efficiency(const EngineParams& p, double xi) {
    if (!(xi >= 0.0)) throw ValidationError("efficiency: xi must be non-negative");
    if (!(xi < xi_max(p)))
        throw OutOfDomainError("efficiency: xi outside the work-extraction regime");
    const DerivedParams d = derive(p);
    const double tc = std::tanh(d.theta_c);
    const double th = std::tanh(d.theta_h);
    const double denom = tc - d.zeta * th;
    const double f = d.zeta * th / denom;
    const double g = tc / denom;
    return 1.0 - (p.omega_c / p.omega_h) * (1.0 + 2.0 * xi * f) / (1.0 - 2.0 * xi * g);
}

inline double carnot(const EngineParams& p) { return 1.0 - p.beta_h / p.beta_c; }

inline CycleThermo cycle_thermo(const EngineParams& p, double xi) {
    CycleThermo c;
    c.q_hot = heat_hot(p, xi);
    c.q_cold = heat_cold(p, xi);
    c.w_net = work_net(p, xi);
    c.xi_max = xi_max(p);
    c.extracting = xi < c.xi_max;
    if (c.extracting) c.eta = efficiency(p, xi);
    c.above_carnot = c.eta && *c.eta > carnot(p);
    return c;
}

} // namespace qotto

#endif
