#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "analog.hpp"
#include "dense.hpp"
#include "dephased.hpp"
#include "grover.hpp"

namespace groversim {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline std::vector<std::int64_t> validation_sizes(std::int64_t max_n) {
    std::vector<std::int64_t> sizes;
    for (std::int64_t n : {std::int64_t{4}, std::int64_t{16}, std::int64_t{64},
                           std::int64_t{1024}, std::int64_t{4096}})
        if (n <= max_n) sizes.push_back(n);
    return sizes;
}

}  // namespace detail

// Cross-route validation: every analytic result is recomputed by a dense
// brute-force path (or an independent iteration) and the worst deviation per
// check is reported against a fixed tolerance. max_n bounds the largest dense
// problem; dense density evolution is quadratic in memory, hence the cap.
inline ValidationReport validate_all(std::int64_t max_n) {
    if (max_n < 4 || max_n > max_density_elements)
        throw std::invalid_argument("validate_all: max_n must lie in [4, 4096]");

    ValidationReport report;
    auto add = [&](std::string name, double dev, double tol) {
        report.checks.push_back({std::move(name), dev, tol, dev <= tol});
    };
    const std::vector<std::int64_t> sizes = detail::validation_sizes(max_n);

    // Coherent amplification: two-level closed form against the dense
    // statevector, out to three times the optimal iteration count.
    {
        double dev = 0.0;
        for (std::int64_t n : sizes) {
            const GroverGeometry g = make_geometry(n);
            const std::int64_t k_max = 3 * optimal_k(g) + 3;
            FullState s = uniform_state(n, 0);
            for (std::int64_t k = 0; k <= k_max; ++k) {
                dev = std::max(dev, std::abs(probability_of_marked(s) -
                                             success_probability(g, k)));
                s = apply_diffusion_v(apply_oracle_u(std::move(s)));
            }
        }
        add("coherent-closed-form-vs-dense", dev, 1e-10);
    }

    // Dephased amplification: closed form, two-state recurrence and the full
    // density-matrix evolution all tracking the same population.
    {
        double dev = 0.0;
        for (std::int64_t n : sizes) {
            const GroverGeometry g = make_geometry(n);
            const std::int64_t k_max =
                std::min<std::int64_t>(3 * optimal_k(g) + 3, 200);
            FullDensity rho = dephase_ab(density_from_state(uniform_state(n, 0)));
            DephasedWeights w = dephase_initial(g);
            for (std::int64_t k = 0; k <= k_max; ++k) {
                const double closed = closed_form_c(g, k);
                const double dense = rho.at(0, 0).real();
                dev = std::max(dev, std::abs(closed - w.c));
                dev = std::max(dev, std::abs(closed - dense));
                w = classical_step(w, g);
                rho = dephase_ab(grover_conjugate(std::move(rho)));
            }
        }
        add("dephased-closed-form-vs-recurrence-vs-dense", dev, 1e-10);
    }

    // Analog model: the exact success probability against its small-angle
    // linearization x^2 (1 + (kEdt)^2), remainder bounded by (xEkdt)^3.
    {
        double worst_ratio = 0.0;
        for (double x : {0.1, 0.01, 0.001}) {
            const AnalogParams p = make_analog_params(x);
            for (std::int64_t k = 1; static_cast<double>(k) * x <= 0.3; ++k) {
                const double t = static_cast<double>(k) * p.dt;
                const double u = p.x * p.energy * t;
                const double lin =
                    p.x * p.x * (1.0 + std::pow(p.energy * t, 2.0));
                const double diff = std::abs(coherent_success(p, t) - lin);
                worst_ratio = std::max(worst_ratio, diff / (u * u * u));
            }
        }
        add("analog-linearization-remainder", worst_ratio, 1.0);
    }

    // Analog per-slice transfer against its quadratic leading order,
    // remainder bounded by (xE dt)^4.
    {
        double worst_ratio = 0.0;
        for (double x : {0.5, 0.1, 0.01}) {
            for (double u : {0.1, 0.05, 0.01, 0.001}) {
                const AnalogParams p = make_analog_params(x, 1.0, u / x);
                const double lead = u * u * (1.0 - x * x);
                const double diff = std::abs(dephased_transfer(p) - lead);
                worst_ratio = std::max(worst_ratio, diff / (u * u * u * u));
            }
        }
        add("analog-transfer-leading-order", worst_ratio, 1.0);
    }

    // Analog dephased slices: direct iteration against the closed form.
    {
        double dev = 0.0;
        for (std::int64_t n : sizes) {
            const AnalogParams p = analog_params_for_size(n);
            const double s = dephased_transfer(p);
            AnalogWeights w = analog_initial(p);
            const std::int64_t k_max = std::min<std::int64_t>(4 * n, 10'000);
            for (std::int64_t k = 0; k <= k_max; ++k) {
                dev = std::max(dev, std::abs(w.w - analog_closed_form_w(p, k)));
                w = analog_step(w, s);
            }
        }
        add("analog-iterated-vs-closed-form", dev, 1e-10);
    }

    // Entanglement diagnostics: across a full oscillation period, every
    // single-qubit bipartition of the iterated state must be entangled
    // exactly when both sin(2k theta) and cos((2k+1) theta) are nonzero.
    {
        std::int64_t mismatches = 0;
        const int max_qubits =
            static_cast<int>(std::min<std::int64_t>(6, std::int64_t(std::log2(double(max_n)))));
        for (int nq = 2; nq <= max_qubits; ++nq) {
            const std::int64_t n = std::int64_t{1} << nq;
            const GroverGeometry g = make_geometry(n);
            const std::int64_t period =
                static_cast<std::int64_t>(std::llround(pi / g.theta));
            FullState s = uniform_state(n, 0);
            for (std::int64_t k = 0; k <= period; ++k) {
                const double sin_2k = std::sin(2.0 * static_cast<double>(k) * g.theta);
                const double cos_2k1 =
                    std::cos(static_cast<double>(2 * k + 1) * g.theta);
                const bool expect =
                    std::abs(sin_2k) > 1e-9 && std::abs(cos_2k1) > 1e-9;
                for (int q = 0; q < nq; ++q) {
                    const QubitFactorization f{nq, {q}};
                    if (is_entangled(s, f) != expect) ++mismatches;
                }
                s = apply_diffusion_v(apply_oracle_u(std::move(s)));
            }
        }
        add("entanglement-vs-angle-criterion", static_cast<double>(mismatches), 0.0);
    }

    // Exactly solvable four-element anchors.
    {
        const GroverGeometry g4 = make_geometry(4);
        double dev = std::abs(success_probability(g4, 1) - 1.0);
        dev = std::max(dev, std::abs(closed_form_c(g4, 1) - 0.625));
        dev = std::max(dev, std::abs(evolve_dephased_full(4, 0, 1) - 0.625));
        dev = std::max(
            dev, std::abs(probability_of_marked(grover_iterate(uniform_state(4, 0), 1)) -
                          1.0));
        add("four-element-exact-anchors", dev, 1e-12);
    }

    return report;
}

}  // namespace groversim
