#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace groversim {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Problem size N together with theta = arcsin(1/sqrt(N)), the rotation angle
// of the two-dimensional invariant subspace spanned by the marked element and
// the uniform superposition of the remaining N-1 elements.
struct GroverGeometry {
    std::int64_t n_elements = 0;
    double theta = 0.0;
};

// Amplitude pair on the {marked, rest} basis. The dynamics is real, but the
// amplitudes are kept complex so downstream consumers can treat them like any
// other state vector.
struct TwoLevelState {
    std::complex<double> amp_a;  // marked component
    std::complex<double> amp_b;  // rest component
};

inline GroverGeometry make_geometry(std::int64_t n_elements) {
    if (n_elements < 2)
        throw std::invalid_argument("make_geometry: n_elements must be >= 2");
    const double n = static_cast<double>(n_elements);
    return {n_elements, std::asin(1.0 / std::sqrt(n))};
}

// Uniform superposition expressed on the {marked, rest} basis:
// sin(theta) on the marked element, cos(theta) on the rest.
inline TwoLevelState initial_plus(const GroverGeometry& g) {
    return {std::sin(g.theta), std::cos(g.theta)};
}

namespace detail {

// Angles j*theta grow linearly with the iteration count; forming the product
// in extended precision keeps two different routes to the same iterate in
// agreement to ~1e-15 even for j ~ 1e4 at N = 2, where the angle itself is
// of order 1e4 and a double-rounded product already costs ~1e-12.
inline long double step_angle(double theta, std::int64_t steps) {
    return static_cast<long double>(steps) * static_cast<long double>(theta);
}

}  // namespace detail

// k amplification iterations applied as the closed-form rotation by 2k*theta:
//   amp_a' =  amp_a cos(2k theta) + amp_b sin(2k theta)
//   amp_b' = -amp_a sin(2k theta) + amp_b cos(2k theta)
inline TwoLevelState apply_vu(const TwoLevelState& state, const GroverGeometry& g,
                              std::int64_t k) {
    if (k < 0) throw std::invalid_argument("apply_vu: k must be >= 0");
    const long double ang = detail::step_angle(g.theta, 2 * k);
    const double c = static_cast<double>(std::cos(ang));
    const double s = static_cast<double>(std::sin(ang));
    return {state.amp_a * c + state.amp_b * s,
            state.amp_b * c - state.amp_a * s};
}

// Probability of finding the marked element after k coherent iterations from
// the uniform superposition: sin^2((2k+1) theta).
inline double success_probability(const GroverGeometry& g, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("success_probability: k must be >= 0");
    const double s = static_cast<double>(std::sin(detail::step_angle(g.theta, 2 * k + 1)));
    return s * s;
}

// Iteration count maximizing the success probability, ~ pi sqrt(N) / 4.
// The real-valued optimum pi/(4 theta) - 1/2 is rounded and then checked
// against both neighbors; ties inside a 1e-12 band go to the smaller k.
inline std::int64_t optimal_k(const GroverGeometry& g) {
    const auto candidate =
        static_cast<std::int64_t>(std::llround(pi / (4.0 * g.theta) - 0.5));
    std::int64_t best = std::max<std::int64_t>(candidate - 1, std::int64_t{0});
    double best_p = success_probability(g, best);
    for (std::int64_t k = best + 1; k <= candidate + 1; ++k) {
        const double p = success_probability(g, k);
        if (p > best_p + 1e-12) {
            best = k;
            best_p = p;
        }
    }
    return best;
}

// Baseline without amplification: a single preparation of the uniform
// superposition finds the marked element with probability 1/N.
inline double single_query_success(std::int64_t n_elements) {
    if (n_elements < 1)
        throw std::invalid_argument("single_query_success: n_elements must be >= 1");
    return 1.0 / static_cast<double>(n_elements);
}

}  // namespace groversim
