#ifndef QOTTO_CYCLE_HPP
#define QOTTO_CYCLE_HPP

// Stroke-by-stroke density-matrix simulation of the four-stroke cycle.
// Heat is booked on the fixed-Hamiltonian strokes and work on the
// unitary strokes; the ledger is the independent ground truth for the
// closed-form thermodynamics.

#include <cmath>

#include "qotto/drive.hpp"
#include "qotto/params.hpp"
#include "qotto/qmath.hpp"
#include "qotto/states.hpp"

namespace qotto {

struct CycleLedger {
    QubitState rho1, rho2, rho3, rho4;
    double e1c, e2h, e3h, e4c; // peV
    double q_cold, q_hot;      // peV
    double w_expansion, w_compression, w_net; // peV
    double xi_effective;
};

inline CycleLedger run_cycle(const EngineParams& p, const Mat2& u) {
    validate(p);
    if (!is_unitary(u, 1e-10))
        throw ValidationError("run_cycle: propagator fails the unitarity check");

    const Hamiltonian2 hc = make_hamiltonian(Axis::x, p.omega_c);
    const Hamiltonian2 hh = make_hamiltonian(Axis::y, p.omega_h);
    const Mat2 udag = adjoint(u);

    CycleLedger L;
    L.rho1 = gibbs(hc, p.beta_c);
    L.rho2 = QubitState{u * L.rho1.rho * udag};
    L.rho3 = squeezed_asymptotic(hh, p.beta_h, p.r);
    L.rho4 = QubitState{udag * L.rho3.rho * u};
    check_state(L.rho2, "run_cycle: after expansion");
    check_state(L.rho4, "run_cycle: after compression");

    L.e1c = energy(L.rho1, hc);
    L.e2h = energy(L.rho2, hh);
    L.e3h = energy(L.rho3, hh);
    L.e4c = energy(L.rho4, hc);

    L.w_expansion = L.e2h - L.e1c;
    L.q_hot = L.e3h - L.e2h;
    L.w_compression = L.e4c - L.e3h;
    L.q_cold = L.e1c - L.e4c;
    L.w_net = L.w_expansion + L.w_compression;
    L.xi_effective = xi_from_unitary(u);
    return L;
}

// A unitary with prescribed transition probability xi between the
// sigma_x and sigma_y eigenbases. The phase varies the coherence
// structure without changing xi.
inline Mat2 synthetic_unitary(double xi, double phase) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw ValidationError("synthetic_unitary: xi must lie in [0, 1]");
    const double c = std::sqrt(1.0 - xi);
    const double s = std::sqrt(xi);
    const C64 eip = std::exp(I_UNIT * phase);
    // Columns of bx are |+x>, |-x>; columns of by are |+y>, |-y>.
    const Ket2 px = ket_plus_x(), mx = ket_minus_x();
    const Ket2 py = ket_plus_y(), my = ket_minus_y();
    Mat2 bx{{px.a[0], mx.a[0], px.a[1], mx.a[1]}};
    Mat2 by{{py.a[0], my.a[0], py.a[1], my.a[1]}};
    Mat2 rot{{C64{c}, -s * eip, s * std::conj(eip), C64{c}}};
    return by * rot * adjoint(bx);
}

} // namespace qotto

#endif
