#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "grover.hpp"

namespace groversim {

// Classical probability pair on the {marked, rest} split after complete
// dephasing. Both weights are carried explicitly so that trace drift stays
// observable instead of being normalized away.
struct DephasedWeights {
    double c = 0.0;  // weight on the marked element
    double d = 0.0;  // weight on the rest
};

namespace detail {

// sin^2(2 theta): the per-iteration probability transferred between the two
// populations once all coherences are removed.
inline double transfer_probability(const GroverGeometry& g) {
    const double s = std::sin(2.0 * g.theta);
    return s * s;
}

}  // namespace detail

// Weights of the fully dephased uniform superposition: sin^2(theta) = 1/N on
// the marked element, the remainder on its complement.
inline DephasedWeights dephase_initial(const GroverGeometry& g) {
    const double c = 1.0 / static_cast<double>(g.n_elements);
    return {c, 1.0 - c};
}

// One amplification iteration followed by complete dephasing: the symmetric
// two-state stochastic map
//   c' = c cos^2(2 theta) + d sin^2(2 theta)
//   d' = d cos^2(2 theta) + c sin^2(2 theta)
// evaluated in transfer form (c' = c + t, d' = d - t with t the net flow) so
// c + d is preserved to the last bit over millions of steps.
inline DephasedWeights classical_step(const DephasedWeights& w, const GroverGeometry& g) {
    const double t = detail::transfer_probability(g) * (w.d - w.c);
    return {w.c + t, w.d - t};
}

// Exact solution of the dephased recurrence:
//   c_k = 1/2 - (1/2 - 1/N) cos^k(4 theta).
inline double closed_form_c(const GroverGeometry& g, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("closed_form_c: k must be >= 0");
    const double r = std::cos(4.0 * g.theta);
    const double c0 = 1.0 / static_cast<double>(g.n_elements);
    return 0.5 - (0.5 - c0) * std::pow(r, static_cast<double>(k));
}

// Large-N limit at fixed k/N: c_k -> (1 - exp(-8k/N)) / 2.
inline double asymptotic_c(std::int64_t n_elements, std::int64_t k) {
    if (n_elements < 2)
        throw std::invalid_argument("asymptotic_c: n_elements must be >= 2");
    if (k < 0) throw std::invalid_argument("asymptotic_c: k must be >= 0");
    const double ratio = static_cast<double>(k) / static_cast<double>(n_elements);
    return 0.5 * (1.0 - std::exp(-8.0 * ratio));
}

// Small-k/N expansion of the dephased success probability, (1 + 4k)/N. Only
// meaningful while it is still a probability; out-of-domain inputs are
// rejected rather than clamped.
inline double linearized_probability(std::int64_t n_elements, std::int64_t k) {
    if (n_elements < 2)
        throw std::invalid_argument("linearized_probability: n_elements must be >= 2");
    if (k < 0) throw std::invalid_argument("linearized_probability: k must be >= 0");
    const double p =
        (1.0 + 4.0 * static_cast<double>(k)) / static_cast<double>(n_elements);
    if (p > 1.0)
        throw std::domain_error("linearized_probability: (1 + 4k)/N exceeds 1");
    return p;
}

}  // namespace groversim
