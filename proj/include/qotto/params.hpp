#ifndef QOTTO_PARAMS_HPP
#define QOTTO_PARAMS_HPP

// Engine parameter records and the dimensionless quantities every
// closed form consumes. Internal units: rad/s for angular frequencies,
// peV for energies; beta absorbs the Boltzmann constant (beta = 1/kT).

#include <cmath>
#include <numbers>
#include <string>

#include "qotto/errors.hpp"

namespace qotto {

inline constexpr double HBAR_PEV_S = 6.582119569e-4; // reduced Planck constant, peV*s

struct EngineParams {
    double omega_c; // rad/s
    double omega_h; // rad/s
    double beta_c;  // 1/peV
    double beta_h;  // 1/peV
    double r;       // squeezing parameter, dimensionless
};

struct DerivedParams {
    double theta_c; // (1/2) beta_c hbar omega_c
    double theta_h; // (1/2) beta_h hbar omega_h
    double zeta;    // 1/(mu^2+nu^2)^2 = sech^2(2r)
    double mu;      // cosh r
    double nu;      // sinh r
};

inline void validate(const EngineParams& p) {
    if (!(p.omega_c > 0.0)) throw ValidationError("omega_c must be positive");
    if (!(p.omega_h > p.omega_c)) throw ValidationError("omega_h must exceed omega_c");
    if (!(p.beta_c > 0.0)) throw ValidationError("beta_c must be positive");
    if (!(p.beta_h > 0.0)) throw ValidationError("beta_h must be positive");
    if (!(p.r >= 0.0)) throw ValidationError("r must be non-negative");
}

// beta_h >= beta_c is legal (the extraction gate is the operative
// condition, not the bare temperature ordering) but worth flagging.
inline bool has_inverted_temperature_order(const EngineParams& p) {
    return p.beta_h >= p.beta_c;
}

inline double squeezing_factor(double r) {
    const double c = std::cosh(2.0 * r);
    return 1.0 / (c * c);
}

inline DerivedParams derive(const EngineParams& p) {
    validate(p);
    DerivedParams d;
    d.theta_c = 0.5 * p.beta_c * HBAR_PEV_S * p.omega_c;
    d.theta_h = 0.5 * p.beta_h * HBAR_PEV_S * p.omega_h;
    d.mu = std::cosh(p.r);
    d.nu = std::sinh(p.r);
    const double s = d.mu * d.mu + d.nu * d.nu; // = cosh(2r)
    d.zeta = 1.0 / (s * s);
    return d;
}

inline EngineParams from_lab_units(double freq_c_khz, double ratio,
                                   double energy_scale_pev, double beta_ratio,
                                   double r) {
    if (!(freq_c_khz > 0.0)) throw ValidationError("freq_c_khz must be positive");
    if (!(ratio > 1.0)) throw ValidationError("omega ratio must exceed 1");
    if (!(energy_scale_pev > 0.0)) throw ValidationError("energy_scale_pev must be positive");
    if (!(beta_ratio > 0.0)) throw ValidationError("beta_ratio must be positive");
    if (!(r >= 0.0)) throw ValidationError("r must be non-negative");
    EngineParams p;
    p.omega_c = 2.0 * std::numbers::pi * freq_c_khz * 1.0e3;
    p.omega_h = ratio * p.omega_c;
    p.beta_c = 1.0 / energy_scale_pev;
    p.beta_h = beta_ratio * p.beta_c;
    p.r = r;
    return p;
}

// The NMR working point: omega_c = 2*pi*2.5 kHz, omega_h = 10 omega_c,
// beta_c = 1/(10 peV), beta_h = 0.7 beta_c.
inline EngineParams nmr_params(double r) {
    return from_lab_units(2.5, 10.0, 10.0, 0.7, r);
}

} // namespace qotto

#endif
