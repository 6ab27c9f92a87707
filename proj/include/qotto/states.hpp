#ifndef QOTTO_STATES_HPP
#define QOTTO_STATES_HPP

// Boundary states of the cycle: the cold Gibbs state and the hot
// squeezed-reservoir asymptotic state, plus energy evaluation.

#include <cmath>
#include <string>

#include "qotto/params.hpp"
#include "qotto/qmath.hpp"

namespace qotto {

struct Hamiltonian2 {
    Mat2 h;       // peV
    Axis axis;    // x or y
    double omega; // rad/s
};

// H = (1/2) hbar omega sigma_axis
inline Hamiltonian2 make_hamiltonian(Axis axis, double omega) {
    if (!(omega > 0.0)) throw ValidationError("hamiltonian: omega must be positive");
    Hamiltonian2 H;
    H.axis = axis;
    H.omega = omega;
    H.h = (0.5 * HBAR_PEV_S * omega) * pauli(axis);
    return H;
}

struct QubitState {
    Mat2 rho;
};

// trace one, Hermitian, positive semidefinite (all to 1e-12).
inline void check_state(const QubitState& s, const std::string& where) {
    const Mat2& rho = s.rho;
    if (std::abs(trace(rho) - C64{1.0}) > 1e-12)
        throw ConsistencyError(where + ": density matrix trace differs from 1");
    if (!is_hermitian(rho, 1e-12))
        throw ConsistencyError(where + ": density matrix is not Hermitian");
    // Eigenvalues of a 2x2 Hermitian matrix from trace and determinant.
    const double t = trace(rho).real();
    const C64 detc = rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0);
    const double disc = std::max(0.25 * t * t - detc.real(), 0.0);
    const double lo = 0.5 * t - std::sqrt(disc);
    if (lo < -1e-12)
        throw ConsistencyError(where + ": density matrix has a negative eigenvalue");
}

// Diagonal state in the sigma_axis eigenbasis with the given
// polarization <sigma_axis> = pol.
inline QubitState polarized_state(Axis axis, double pol) {
    const Ket2 up = eigenket(axis, +1);
    const Ket2 dn = eigenket(axis, -1);
    const double p_up = 0.5 * (1.0 + pol);
    const double p_dn = 0.5 * (1.0 - pol);
    QubitState s{p_up * outer(up, up) + p_dn * outer(dn, dn)};
    check_state(s, "polarized_state");
    return s;
}

// rho = exp(-beta H)/Tr(exp(-beta H)); ground-state population
// (1 + tanh theta)/2 with theta = (1/2) beta hbar omega.
inline QubitState gibbs(const Hamiltonian2& H, double beta) {
    if (!(beta > 0.0)) throw ValidationError("gibbs: beta must be positive");
    const double theta = 0.5 * beta * HBAR_PEV_S * H.omega;
    return polarized_state(H.axis, -std::tanh(theta));
}

// Asymptotic state under the squeezed reservoir: diagonal in the H
// eigenbasis with polarization -zeta tanh(theta), zeta = sech^2(2r).
// At r = 0 this is exactly the Gibbs state.
inline QubitState squeezed_asymptotic(const Hamiltonian2& H, double beta, double r) {
    if (!(beta > 0.0)) throw ValidationError("squeezed_asymptotic: beta must be positive");
    if (!(r >= 0.0)) throw ValidationError("squeezed_asymptotic: r must be non-negative");
    const double theta = 0.5 * beta * HBAR_PEV_S * H.omega;
    return polarized_state(H.axis, -squeezing_factor(r) * std::tanh(theta));
}

// <E> = Tr(rho H), in peV.
inline double energy(const QubitState& s, const Hamiltonian2& H) {
    const C64 e = trace(s.rho * H.h);
    const double scale = std::max(std::abs(e), 1.0);
    if (std::abs(e.imag()) > 1e-9 * scale)
        throw ConsistencyError("energy: Tr(rho H) has a non-negligible imaginary part");
    return e.real();
}

} // namespace qotto

#endif
