#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace groversim {

// Two-level continuous-time search: overlap x between the initial state and
// the target, energy scale E of the driving Hamiltonian, and the slice
// duration dt used when the evolution is chopped into unitary pieces with
// complete dephasing in between.
struct AnalogParams {
    double x = 0.0;
    double energy = 0.0;
    double dt = 0.0;
};

inline AnalogParams make_analog_params(double x, double energy, double dt) {
    if (!(x > 0.0) || x > 1.0)
        throw std::invalid_argument("make_analog_params: x must lie in (0, 1]");
    if (!(energy > 0.0))
        throw std::invalid_argument("make_analog_params: energy must be > 0");
    if (!(dt > 0.0))
        throw std::invalid_argument("make_analog_params: dt must be > 0");
    return {x, energy, dt};
}

// Default slice duration: one natural unit, E * dt = 1.
inline AnalogParams make_analog_params(double x, double energy = 1.0) {
    if (!(energy > 0.0))
        throw std::invalid_argument("make_analog_params: energy must be > 0");
    return make_analog_params(x, energy, 1.0 / energy);
}

// Parameters matching an unstructured search over n elements: the uniform
// start has overlap x = 1/sqrt(n) with the target.
inline AnalogParams analog_params_for_size(std::int64_t n_elements) {
    if (n_elements < 2)
        throw std::invalid_argument("analog_params_for_size: n_elements must be >= 2");
    return make_analog_params(1.0 / std::sqrt(static_cast<double>(n_elements)));
}

// Components of the evolved state on the {target, rest} basis.
struct AnalogAmplitudes {
    std::complex<double> coeff_w;  // target component
    std::complex<double> coeff_r;  // orthogonal rest component
};

// Exact evolution of the two-level Hamiltonian,
//   psi(t) = e^{-iEt} [ (x cos(xEt) - i sin(xEt)) |w> + sqrt(1-x^2) cos(xEt) |r> ],
// including the global phase so downstream interference checks stay honest.
inline AnalogAmplitudes evolve_exact(const AnalogParams& p, double t) {
    if (t < 0.0) throw std::invalid_argument("evolve_exact: t must be >= 0");
    const double u = p.x * p.energy * t;
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -p.energy * t));
    const std::complex<double> w(p.x * std::cos(u), -std::sin(u));
    const std::complex<double> r(std::sqrt(1.0 - p.x * p.x) * std::cos(u), 0.0);
    return {phase * w, phase * r};
}

// |<w|psi(t)>|^2 = x^2 + (1 - x^2) sin^2(xEt), computed from the exact state.
inline double coherent_success(const AnalogParams& p, double t) {
    return std::norm(evolve_exact(p, t).coeff_w);
}

// Probability moved between the two populations by one dephased slice of
// duration dt: s = (1 - x^2) sin^2(xE dt). Its leading order for short
// slices is (xE dt)^2 (1 - x^2).
inline double dephased_transfer(const AnalogParams& p) {
    const double s = std::sin(p.x * p.energy * p.dt);
    return (1.0 - p.x * p.x) * s * s;
}

// Classical probability pair on the {target, rest} split.
struct AnalogWeights {
    double w = 0.0;  // weight on the target
    double r = 0.0;  // weight on the rest
};

inline AnalogWeights analog_initial(const AnalogParams& p) {
    const double w = p.x * p.x;
    return {w, 1.0 - w};
}

// Symmetric two-state stochastic map with the given transfer probability,
// in the same trace-preserving transfer form as the discrete search.
inline AnalogWeights analog_step(const AnalogWeights& weights, double transfer) {
    const double t = transfer * (weights.r - weights.w);
    return {weights.w + t, weights.r - t};
}

inline AnalogWeights analog_classical_step(const AnalogWeights& weights,
                                           const AnalogParams& p) {
    return analog_step(weights, dephased_transfer(p));
}

// k dephased slices from the t = 0 weights, by direct iteration.
inline AnalogWeights analog_k_step(const AnalogParams& p, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("analog_k_step: k must be >= 0");
    const double s = dephased_transfer(p);
    AnalogWeights w = analog_initial(p);
    for (std::int64_t i = 0; i < k; ++i) w = analog_step(w, s);
    return w;
}

// The same target weight in closed form: w_k = 1/2 - (1/2 - x^2)(1 - 2s)^k.
inline double analog_closed_form_w(const AnalogParams& p, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("analog_closed_form_w: k must be >= 0");
    const double s = dephased_transfer(p);
    return 0.5 - (0.5 - p.x * p.x) * std::pow(1.0 - 2.0 * s, static_cast<double>(k));
}

}  // namespace groversim
