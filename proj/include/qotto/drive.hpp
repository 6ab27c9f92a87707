#ifndef QOTTO_DRIVE_HPP
#define QOTTO_DRIVE_HPP

// The NMR expansion-stroke drive: H(t) interpolating from
// (1/2) hbar omega_c sigma_x to (1/2) hbar omega_h sigma_y, its
// time-ordered propagator, and the adiabaticity parameter xi(tau).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "qotto/params.hpp"
#include "qotto/qmath.hpp"

namespace qotto {

struct DriveSchedule {
    double omega_c; // rad/s
    double omega_h; // rad/s
    double tau;     // s
};

inline void validate(const DriveSchedule& s) {
    if (!(s.omega_c > 0.0)) throw ValidationError("omega_c must be positive");
    if (!(s.omega_h > s.omega_c)) throw ValidationError("omega_h must exceed omega_c");
    if (!(s.tau >= 0.0)) throw ValidationError("tau must be non-negative");
}

struct Propagator {
    Mat2 u = Mat2::identity();
    std::int64_t steps_used = 0;
    bool converged = false;
};

// H(t) = (1/2) hbar [omega_c(1-t/tau) + omega_h t/tau]
//        [cos(pi t / 2 tau) sigma_x + sin(pi t / 2 tau) sigma_y]
inline Mat2 hamiltonian_at(const DriveSchedule& s, double t) {
    validate(s);
    if (!(s.tau > 0.0)) throw ValidationError("hamiltonian_at: tau must be positive");
    if (t < 0.0 || t > s.tau) throw ValidationError("hamiltonian_at: t outside [0, tau]");
    const double u = t / s.tau;
    const double omega = s.omega_c * (1.0 - u) + s.omega_h * u;
    const double phi = 0.5 * std::numbers::pi * u;
    return (0.5 * HBAR_PEV_S * omega) *
           (std::cos(phi) * pauli(Axis::x) + std::sin(phi) * pauli(Axis::y));
}

// Time-ordered product of exact SU(2) step exponentials with the
// midpoint generator on each slice, latest factor on the left.
inline Propagator propagate(const DriveSchedule& s, std::int64_t n_steps) {
    validate(s);
    if (n_steps < 1) throw ValidationError("propagate: n_steps must be at least 1");
    if (!(s.tau > 0.0)) throw ValidationError("propagate: tau must be positive");
    const double dt = s.tau / static_cast<double>(n_steps);
    Mat2 u = Mat2::identity();
    for (std::int64_t k = 0; k < n_steps; ++k) {
        const double tm = (static_cast<double>(k) + 0.5) * dt;
        const double frac = tm / s.tau;
        const double omega = s.omega_c * (1.0 - frac) + s.omega_h * frac;
        const double phi = 0.5 * std::numbers::pi * frac;
        // generator H(tm) dt / hbar = (omega dt / 2) (cos phi sigma_x + sin phi sigma_y)
        u = expm_su2(0.5 * omega * dt, std::cos(phi), std::sin(phi), 0.0) * u;
    }
    Propagator p;
    p.u = u;
    p.steps_used = n_steps;
    p.converged = true;
    return p;
}

// xi = |<+_y|U|-_x>|^2, checked against the equal-by-unitarity
// partner |<-_y|U|+_x>|^2.
inline double xi_from_unitary(const Mat2& u, double check_tol = 1e-10) {
    const C64 amp1 = inner(ket_plus_y(), apply(u, ket_minus_x()));
    const C64 amp2 = inner(ket_minus_y(), apply(u, ket_plus_x()));
    const double xi1 = std::norm(amp1);
    const double xi2 = std::norm(amp2);
    if (std::abs(xi1 - xi2) > check_tol)
        throw ConsistencyError("xi_from_unitary: two-sided transition probabilities disagree");
    return xi1;
}

struct XiResult {
    double xi = 0.0;
    std::int64_t steps_used = 0;
    bool converged = false;
};

inline constexpr std::int64_t XI_STEPS_START = 1024;
inline constexpr std::int64_t XI_STEPS_CAP = std::int64_t{1} << 22;
inline constexpr double XI_TOL = 1e-10;

// Step-doubling on the scalar xi until successive estimates agree.
inline XiResult adiabaticity_xi(const DriveSchedule& s) {
    validate(s);
    if (s.tau == 0.0) {
        // U = identity; the sigma_x/sigma_y bases are mutually unbiased.
        return XiResult{0.5, 0, true};
    }
    std::int64_t n = XI_STEPS_START;
    double prev = xi_from_unitary(propagate(s, n).u);
    while (n < XI_STEPS_CAP) {
        n *= 2;
        const double cur = xi_from_unitary(propagate(s, n).u);
        if (std::abs(cur - prev) < XI_TOL) return XiResult{cur, n, true};
        prev = cur;
    }
    throw ConvergenceError("adiabaticity_xi: step cap reached without convergence",
                           prev, xi_from_unitary(propagate(s, n).u));
}

// Smallest tau (on a refining grid, first crossing of the decaying
// envelope) with xi(tau) <= xi_target.
inline double xi_to_tau(double omega_c, double omega_h, double xi_target,
                        double tau_cap) {
    if (!(xi_target > 0.0 && xi_target < 0.5))
        throw ValidationError("xi_to_tau: target must lie in (0, 1/2)");
    if (!(tau_cap > 0.0)) throw ValidationError("xi_to_tau: tau cap must be positive");
    auto xi_at = [&](double tau) {
        return adiabaticity_xi(DriveSchedule{omega_c, omega_h, tau}).xi;
    };
    const int coarse = 256;
    double lo = 0.0;
    double hi = -1.0;
    for (int k = 1; k <= coarse; ++k) {
        const double tau = tau_cap * static_cast<double>(k) / coarse;
        if (xi_at(tau) <= xi_target) {
            hi = tau;
            break;
        }
        lo = tau;
    }
    if (hi < 0.0)
        throw NotFoundError("xi_to_tau: target not reached below tau cap");
    // Refine the first crossing.
    while (hi - lo > 1e-9 * tau_cap) {
        const double mid = 0.5 * (lo + hi);
        if (xi_at(mid) <= xi_target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace qotto

#endif
