#include <catch_amalgamated.hpp>

#include <cmath>

#include "qotto/drive.hpp"
#include "qotto/params.hpp"

using namespace qotto;

namespace {

const EngineParams NMR = nmr_params(0.0);
const DriveSchedule SCHED{NMR.omega_c, NMR.omega_h, 1e-3};

// Smallest tau on a 0.1 ms grid with xi <= 0.01 for the NMR schedule,
// frozen from an independent step-integrator run (xi there 0.0094343).
constexpr double XI_REGRESSION_TAU_S = 0.3e-3;

// Test-local re-integration over an arbitrary sub-interval, built
// directly from the schedule definition rather than propagate().
Mat2 integrate_interval(const DriveSchedule& s, double t0, double t1, long n) {
    const double dt = (t1 - t0) / static_cast<double>(n);
    Mat2 u = Mat2::identity();
    for (long k = 0; k < n; ++k) {
        const double tm = t0 + (static_cast<double>(k) + 0.5) * dt;
        const double f = tm / s.tau;
        const double omega = s.omega_c * (1.0 - f) + s.omega_h * f;
        const double phi = 0.5 * M_PI * f;
        u = expm_su2(0.5 * omega * dt, std::cos(phi), std::sin(phi), 0.0) * u;
    }
    return u;
}

} // namespace

TEST_CASE("drive Hamiltonian boundary and midpoint values") {
    const double hw = 0.5 * HBAR_PEV_S;
    CHECK(max_abs_diff(hamiltonian_at(SCHED, 0.0), (hw * SCHED.omega_c) * pauli(Axis::x)) < 1e-12);
    CHECK(max_abs_diff(hamiltonian_at(SCHED, SCHED.tau),
                       (hw * SCHED.omega_h) * pauli(Axis::y)) < 1e-12);
    const double omega_mid = 0.5 * (SCHED.omega_c + SCHED.omega_h);
    const Mat2 expected =
        (hw * omega_mid / std::sqrt(2.0)) * (pauli(Axis::x) + pauli(Axis::y));
    CHECK(max_abs_diff(hamiltonian_at(SCHED, 0.5 * SCHED.tau), expected) < 1e-12);
    CHECK_THROWS_AS(hamiltonian_at(SCHED, -1e-9), ValidationError);
    CHECK_THROWS_AS(hamiltonian_at(SCHED, SCHED.tau * 1.001), ValidationError);
}

TEST_CASE("propagator basics") {
    SECTION("vanishing integrated action gives the identity") {
        const DriveSchedule tiny{NMR.omega_c, NMR.omega_h, 1e-12};
        CHECK(max_abs_diff(propagate(tiny, 64).u, Mat2::identity()) < 1e-6);
    }
    SECTION("unitarity defect stays at machine precision for large step counts") {
        for (long n : {1L, 1024L, 1L << 17}) {
            const Propagator p = propagate(SCHED, n);
            CHECK(max_abs_diff(adjoint(p.u) * p.u, Mat2::identity()) < 1e-12);
        }
    }
    SECTION("midpoint rule converges at second order") {
        const Mat2 ref = propagate(SCHED, 1 << 16).u;
        const double e1 = max_abs_diff(propagate(SCHED, 512).u, ref);
        const double e2 = max_abs_diff(propagate(SCHED, 1024).u, ref);
        const double e4 = max_abs_diff(propagate(SCHED, 2048).u, ref);
        CHECK(e1 / e2 == Catch::Approx(4.0).epsilon(0.3));
        CHECK(e2 / e4 == Catch::Approx(4.0).epsilon(0.3));
    }
    SECTION("composition over half-intervals") {
        const long n = 1 << 14;
        const Mat2 whole = propagate(SCHED, n).u;
        const Mat2 first = integrate_interval(SCHED, 0.0, 0.5 * SCHED.tau, n / 2);
        const Mat2 second = integrate_interval(SCHED, 0.5 * SCHED.tau, SCHED.tau, n / 2);
        CHECK(max_abs_diff(whole, second * first) < 1e-9);
    }
}

TEST_CASE("adiabaticity parameter") {
    SECTION("sudden limit is exactly 1/2") {
        const XiResult x = adiabaticity_xi(DriveSchedule{NMR.omega_c, NMR.omega_h, 0.0});
        CHECK(x.xi == 0.5);
        CHECK(x.converged);
    }
    SECTION("regression: frozen threshold crossing on the 0.1 ms grid") {
        const double xi_at = adiabaticity_xi(
            DriveSchedule{NMR.omega_c, NMR.omega_h, XI_REGRESSION_TAU_S}).xi;
        CHECK(xi_at == Catch::Approx(0.0094343).margin(2e-6));
        CHECK(xi_at <= 0.01);
        const double xi_before = adiabaticity_xi(
            DriveSchedule{NMR.omega_c, NMR.omega_h, XI_REGRESSION_TAU_S - 0.1e-3}).xi;
        CHECK(xi_before > 0.01);
    }
    SECTION("xi decays from 1/2 toward zero across the sweep range") {
        double prev = 0.5;
        for (double tau_ms : {0.001, 0.05, 0.3, 1.0}) {
            const double xi = adiabaticity_xi(
                DriveSchedule{NMR.omega_c, NMR.omega_h, tau_ms * 1e-3}).xi;
            CHECK(xi >= 0.0);
            CHECK(xi <= 0.5 + 1e-12);
            CHECK(xi < prev);
            prev = xi;
        }
        CHECK(prev < 0.01);
    }
    SECTION("phase convention does not affect xi") {
        // xi is a squared modulus of a fixed-basis matrix element; a
        // global phase on the propagator must leave it unchanged.
        const Mat2 u = propagate(SCHED, 4096).u;
        const Mat2 up = std::exp(I_UNIT * 0.7) * u;
        CHECK(std::abs(xi_from_unitary(u) - xi_from_unitary(up)) < 1e-14);
    }
}

TEST_CASE("inverse lookup tau(xi)") {
    SECTION("near-sudden target sits near tau = 0") {
        const double tau = xi_to_tau(NMR.omega_c, NMR.omega_h, 0.49, 2e-3);
        CHECK(tau > 0.0);
        CHECK(tau < 0.05e-3);
    }
    SECTION("xi at the returned tau meets the target, just before it does not") {
        const double tau = xi_to_tau(NMR.omega_c, NMR.omega_h, 0.01, 2e-3);
        CHECK(tau <= XI_REGRESSION_TAU_S + 1e-9);
        CHECK(adiabaticity_xi(DriveSchedule{NMR.omega_c, NMR.omega_h, tau}).xi <= 0.01);
        CHECK(adiabaticity_xi(
                  DriveSchedule{NMR.omega_c, NMR.omega_h, tau * 0.995}).xi > 0.01);
    }
    SECTION("targets outside the decaying branch are rejected") {
        CHECK_THROWS_AS(xi_to_tau(NMR.omega_c, NMR.omega_h, 0.6, 2e-3), ValidationError);
    }
    SECTION("unreachable target below the cap raises not-found") {
        CHECK_THROWS_AS(xi_to_tau(NMR.omega_c, NMR.omega_h, 0.4, 1e-8), NotFoundError);
    }
}
