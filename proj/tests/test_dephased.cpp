#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "groversim/dephased.hpp"
#include "groversim/grover.hpp"

using namespace groversim;
using Catch::Approx;

TEST_CASE("dephase_initial places weight 1/N on the marked element") {
    REQUIRE(dephase_initial(make_geometry(4)).c == 0.25);
    REQUIRE(dephase_initial(make_geometry(4)).d == 0.75);
    REQUIRE(dephase_initial(make_geometry(2)).c == 0.5);
    REQUIRE(dephase_initial(make_geometry(1'000'000)).c == Approx(1e-6).margin(1e-21));

    SECTION("equals the Born weights of the coherent start") {
        for (std::int64_t n : {std::int64_t{2}, std::int64_t{5}, std::int64_t{64},
                               std::int64_t{1} << 16}) {
            const GroverGeometry g = make_geometry(n);
            const TwoLevelState s = initial_plus(g);
            const DephasedWeights w = dephase_initial(g);
            REQUIRE(w.c == Approx(std::norm(s.amp_a)).margin(1e-12));
            REQUIRE(w.d == Approx(std::norm(s.amp_b)).margin(1e-12));
        }
    }
}

TEST_CASE("classical_step implements the two-state transfer map") {
    const GroverGeometry g4 = make_geometry(4);

    SECTION("first iteration at N = 4 gives exactly 5/8") {
        const DephasedWeights w = classical_step(dephase_initial(g4), g4);
        REQUIRE(w.c == Approx(0.625).margin(1e-15));
        REQUIRE(w.d == Approx(0.375).margin(1e-15));
    }

    SECTION("the symmetric point (1/2, 1/2) is a bitwise fixed point") {
        for (std::int64_t n : {std::int64_t{2}, std::int64_t{4}, std::int64_t{97},
                               std::int64_t{1024}}) {
            const GroverGeometry g = make_geometry(n);
            const DephasedWeights w = classical_step({0.5, 0.5}, g);
            REQUIRE(w.c == 0.5);
            REQUIRE(w.d == 0.5);
        }
    }

    SECTION("N = 2 swaps the populations wholesale") {
        const GroverGeometry g2 = make_geometry(2);
        const DephasedWeights w = classical_step({0.25, 0.75}, g2);
        REQUIRE(w.c == 0.75);
        REQUIRE(w.d == 0.25);
    }

    SECTION("an over-weighted marked state loses probability") {
        const GroverGeometry g = make_geometry(64);
        DephasedWeights w{0.9, 0.1};
        for (int k = 0; k < 100; ++k) {
            const DephasedWeights next = classical_step(w, g);
            if (w.c - 0.5 > 1e-12) REQUIRE(next.c < w.c);
            w = next;
        }
        REQUIRE(w.c >= 0.5);
    }

    SECTION("c + d = 1 survives a million iterations") {
        for (std::int64_t n : {std::int64_t{4}, std::int64_t{1024},
                               std::int64_t{1} << 20}) {
            const GroverGeometry g = make_geometry(n);
            DephasedWeights w = dephase_initial(g);
            for (int k = 0; k < 1'000'000; ++k) w = classical_step(w, g);
            REQUIRE(std::abs(w.c + w.d - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("closed_form_c solves the recurrence") {
    const GroverGeometry g4 = make_geometry(4);
    REQUIRE(closed_form_c(g4, 0) == 0.25);
    REQUIRE(closed_form_c(g4, 1) == Approx(0.625).margin(1e-15));
    REQUIRE_THROWS_AS(closed_form_c(g4, -1), std::invalid_argument);

    SECTION("k = 0 reproduces 1/N exactly") {
        for (std::int64_t n : {std::int64_t{2}, std::int64_t{4}, std::int64_t{1024},
                               std::int64_t{1} << 16})
            REQUIRE(closed_form_c(make_geometry(n), 0) ==
                    1.0 / static_cast<double>(n));
    }

    SECTION("agrees with step-by-step iteration") {
        for (std::int64_t n : {std::int64_t{2}, std::int64_t{4}, std::int64_t{8},
                               std::int64_t{64}, std::int64_t{1024}}) {
            const GroverGeometry g = make_geometry(n);
            DephasedWeights w = dephase_initial(g);
            const std::int64_t k_max = std::min<std::int64_t>(4 * n, 4096);
            for (std::int64_t k = 0; k <= k_max; ++k) {
                REQUIRE(std::abs(w.c - closed_form_c(g, k)) < 1e-10);
                w = classical_step(w, g);
            }
        }
    }

    SECTION("monotone approach to 1/2 from below for N >= 8") {
        for (std::int64_t n : {std::int64_t{8}, std::int64_t{64}, std::int64_t{1024}}) {
            const GroverGeometry g = make_geometry(n);
            const double ratio = std::cos(4.0 * g.theta);
            const double amp = 0.5 - 1.0 / static_cast<double>(n);
            double prev = closed_form_c(g, 0);
            for (std::int64_t k = 1; k <= std::min<std::int64_t>(4 * n, 1000); ++k) {
                const double c = closed_form_c(g, k);
                REQUIRE(c <= 0.5);
                REQUIRE(c >= prev);
                // Strict increase demanded only while the analytic increment
                // is resolvable in double precision.
                if (amp * (1.0 - ratio) * std::pow(ratio, static_cast<double>(k - 1)) >
                    1e-13)
                    REQUIRE(c > prev);
                prev = c;
            }
        }
    }

    SECTION("N = 4 oscillates around 1/2 with exactly halving envelope") {
        const GroverGeometry g = make_geometry(4);
        for (std::int64_t k = 0; k <= 40; ++k) {
            const double c = closed_form_c(g, k);
            REQUIRE(std::abs(c - 0.5) * std::pow(2.0, static_cast<double>(k)) ==
                    Approx(0.25).margin(1e-10));
            if (k % 2 == 0)
                REQUIRE(c < 0.5);
            else
                REQUIRE(c > 0.5);
        }
    }

    SECTION("N = 2 pins the population at 1/2") {
        const GroverGeometry g = make_geometry(2);
        for (std::int64_t k : {std::int64_t{0}, std::int64_t{1}, std::int64_t{7},
                               std::int64_t{1000}})
            REQUIRE(closed_form_c(g, k) == 0.5);
    }
}

TEST_CASE("asymptotic_c matches the closed form at large N") {
    REQUIRE(asymptotic_c(1024, 0) == 0.0);
    REQUIRE_THROWS_AS(asymptotic_c(1, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(asymptotic_c(1024, -1), std::invalid_argument);

    SECTION("saturates at 1/2") {
        REQUIRE(asymptotic_c(100, 1'000'000) == Approx(0.5).margin(1e-12));
    }

    SECTION("half-life point: 8k/N = ln 2 gives 1/4") {
        // 8k/N = 8 * 693147 / 8000000 differs from ln 2 by ~2e-7.
        REQUIRE(asymptotic_c(8'000'000, 693'147) == Approx(0.25).margin(1e-6));
    }

    SECTION("close to the exact solution when N is large") {
        const std::int64_t n = std::int64_t{1} << 16;
        const GroverGeometry g = make_geometry(n);
        double dev = 0.0;
        for (std::int64_t k = 0; k <= 4 * n; k += 7)
            dev = std::max(dev, std::abs(closed_form_c(g, k) - asymptotic_c(n, k)));
        REQUIRE(dev < 1e-3);

        REQUIRE(closed_form_c(g, n) ==
                Approx(0.5 * (1.0 - std::exp(-8.0))).margin(2e-3));
    }
}

TEST_CASE("linearized_probability is (1 + 4k)/N on its domain") {
    REQUIRE(linearized_probability(1000, 10) == Approx(0.041).margin(1e-15));
    REQUIRE(linearized_probability(1 << 16, 0) == closed_form_c(make_geometry(1 << 16), 0));
    REQUIRE(linearized_probability(9, 2) == 1.0);  // boundary (1+4k) = N allowed
    REQUIRE_THROWS_AS(linearized_probability(10, 3), std::domain_error);
    REQUIRE_THROWS_AS(linearized_probability(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(linearized_probability(1000, -1), std::invalid_argument);

    SECTION("remainder against the closed form is quadratically small") {
        const std::int64_t n = std::int64_t{1} << 16;
        const GroverGeometry g = make_geometry(n);
        for (std::int64_t k = 1; k <= 64; ++k) {
            const double bound =
                4.0 * std::pow(8.0 * static_cast<double>(k) / static_cast<double>(n), 2.0);
            REQUIRE(std::abs(closed_form_c(g, k) - linearized_probability(n, k)) <
                    bound);
        }
    }
}
