#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qotto/thermo.hpp"

using namespace qotto;

namespace {

const EngineParams NMR1 = nmr_params(1.0);

// High-precision reference values for the NMR set at r = 1:
//   tanh(theta_c) = 0.47534913655286444
//   tanh(theta_h) = 0.99856270182613009
//   zeta(1)       = 0.070650824853164466
constexpr double TANH_TC = 0.47534913655286444;
constexpr double TANH_TH = 0.99856270182613009;
constexpr double ZETA1 = 0.070650824853164466;
constexpr double GAP = TANH_TC - ZETA1 * TANH_TH; // 0.40479985800124383

EngineParams balanced_no_squeeze() {
    // theta_c = theta_h at r = 0: omega ratio 2, beta ratio 1/2
    EngineParams p = nmr_params(0.0);
    p.omega_h = 2.0 * p.omega_c;
    p.beta_h = 0.5 * p.beta_c;
    return p;
}

} // namespace

TEST_CASE("heats at the NMR working point, r = 1") {
    CHECK(heat_hot(NMR1, 0.0) ==
          Catch::Approx(0.5 * HBAR_PEV_S * NMR1.omega_h * GAP).epsilon(1e-12));
    CHECK(heat_hot(NMR1, 0.2) ==
          Catch::Approx(0.5 * HBAR_PEV_S * NMR1.omega_h * GAP -
                        HBAR_PEV_S * 0.2 * NMR1.omega_h * TANH_TC).epsilon(1e-12));
    CHECK(heat_cold(NMR1, 0.0) ==
          Catch::Approx(-0.5 * HBAR_PEV_S * NMR1.omega_c * GAP).epsilon(1e-12));
}

TEST_CASE("degenerate polarizations exchange no heat") {
    const EngineParams p = balanced_no_squeeze();
    CHECK(std::abs(heat_hot(p, 0.0)) < 1e-18);
    CHECK(std::abs(heat_cold(p, 0.0)) < 1e-18);
    CHECK(std::abs(work_net(p, 0.0)) < 1e-18);
}

TEST_CASE("large squeezing limit of the cold heat") {
    EngineParams p = nmr_params(40.0);
    const DerivedParams d = derive(p);
    CHECK(heat_cold(p, 0.0) ==
          Catch::Approx(-0.5 * HBAR_PEV_S * p.omega_c * std::tanh(d.theta_c)).epsilon(1e-10));
}

TEST_CASE("net work at the NMR working point") {
    CHECK(work_net(NMR1, 0.0) ==
          Catch::Approx(-0.5 * HBAR_PEV_S * 9.0 * NMR1.omega_c * GAP).epsilon(1e-12));
    CHECK(work_net(NMR1, 0.0) < 0.0);
    // boundary of the extraction gate, relative to the heat scale
    CHECK(std::abs(work_net(NMR1, xi_max(NMR1))) < 1e-12 * heat_hot(NMR1, 0.0));
}

TEST_CASE("extraction gate xi_max") {
    CHECK(xi_max(NMR1) == Catch::Approx(0.37761).margin(1e-4));
    // no squeezing: hot polarization exceeds the cold one, no extraction
    CHECK(xi_max(nmr_params(0.0)) < 0.0);

    SECTION("smallest extracting r by bisection") {
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (xi_max(nmr_params(mid)) > 0.0 ? hi : lo) = mid;
        }
        CHECK(hi == Catch::Approx(0.4578).margin(1e-3));
    }
}

TEST_CASE("efficiency closed form") {
    SECTION("quasi-static limit is the bare Otto efficiency") {
        CHECK(efficiency(NMR1, 0.0) == Catch::Approx(0.9).margin(1e-15));
    }
    SECTION("finite-time values at r = 1") {
        CHECK(efficiency(NMR1, 0.1) == Catch::Approx(0.86475).margin(1e-4));
        CHECK(efficiency(NMR1, 0.2) == Catch::Approx(0.79828).margin(1e-4));
        CHECK(efficiency(NMR1, 0.3) == Catch::Approx(0.62612).margin(1e-4));
    }
    SECTION("out of regime raises") {
        CHECK_THROWS_AS(efficiency(NMR1, 0.38), OutOfDomainError);
        CHECK_THROWS_AS(efficiency(nmr_params(0.0), 0.0), OutOfDomainError);
    }
}

TEST_CASE("carnot baseline") {
    CHECK(carnot(nmr_params(0.0)) == Catch::Approx(0.3).margin(1e-15));
    CHECK(carnot(from_lab_units(2.5, 10, 10, 1.0, 0.0)) == Catch::Approx(0.0).margin(1e-15));
    CHECK(carnot(from_lab_units(2.5, 10, 10, 0.5, 0.0)) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("property: first law closure and efficiency identity on random draws") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int extracting_draws = 0;
    for (int i = 0; i < 1000; ++i) {
        EngineParams p;
        p.omega_c = 1e3 + 1e5 * u01(rng);
        p.omega_h = p.omega_c * (1.1 + 19.0 * u01(rng));
        p.beta_c = 0.01 + u01(rng);
        p.beta_h = p.beta_c * (0.1 + 1.9 * u01(rng));
        p.r = 3.0 * u01(rng);
        const double xm = xi_max(p);
        const double xi = xm > 0.0 ? 0.9 * xm * u01(rng) : 0.2 * u01(rng);
        const double scale = std::max(std::abs(heat_hot(p, xi)), std::abs(heat_cold(p, xi)));
        CHECK(std::abs(heat_hot(p, xi) + heat_cold(p, xi) + work_net(p, xi)) <=
              1e-15 * std::max(scale, 1e-300));
        if (xi < xm) {
            ++extracting_draws;
            CHECK(heat_hot(p, xi) > 0.0);
            CHECK(heat_cold(p, xi) < 0.0);
            CHECK(work_net(p, xi) < 0.0);
            CHECK(std::abs(efficiency(p, xi) + work_net(p, xi) / heat_hot(p, xi)) < 1e-12);
        }
    }
    CHECK(extracting_draws > 100);
}

TEST_CASE("efficiency decreases strictly in xi") {
    const double xm = xi_max(NMR1);
    double prev = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double xi = xm * static_cast<double>(k) / 200.0;
        const double eta = efficiency(NMR1, xi);
        CHECK(eta < prev);
        prev = eta;
    }
}

TEST_CASE("quasi-static efficiency is independent of r wherever extraction holds") {
    const double eta_ref = efficiency(nmr_params(0.5), 0.0);
    for (double r : {1.0, 2.0}) {
        CHECK(efficiency(nmr_params(r), 0.0) == Catch::Approx(eta_ref).margin(1e-15));
    }
    CHECK(eta_ref == Catch::Approx(0.9).margin(1e-15));
}
