#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "grover.hpp"

namespace groversim {

using Complex = std::complex<double>;

// Dense simulation is a reference oracle, not a production path; the caps
// keep accidental exponential blowups from looking like hangs.
inline constexpr std::int64_t max_statevector_elements = std::int64_t{1} << 24;
inline constexpr std::int64_t max_density_elements = std::int64_t{1} << 12;
inline constexpr std::int64_t max_density_steps = 10'000;

namespace detail {

inline void check_elements(std::int64_t n_elements, std::int64_t cap, const char* who) {
    if (n_elements < 2 || n_elements > cap)
        throw std::invalid_argument(std::string(who) + ": n_elements out of range");
}

inline void check_marked(std::int64_t n_elements, std::int64_t marked, const char* who) {
    if (marked < 0 || marked >= n_elements)
        throw std::invalid_argument(std::string(who) + ": marked_index out of range");
}

}  // namespace detail

// Length-N amplitude vector over the computational basis, together with the
// index of the element the oracle recognizes.
struct FullState {
    std::int64_t marked_index = 0;
    std::vector<Complex> amplitudes;

    std::int64_t size() const { return static_cast<std::int64_t>(amplitudes.size()); }
};

inline FullState uniform_state(std::int64_t n_elements, std::int64_t marked_index) {
    detail::check_elements(n_elements, max_statevector_elements, "uniform_state");
    detail::check_marked(n_elements, marked_index, "uniform_state");
    const Complex amp(1.0 / std::sqrt(static_cast<double>(n_elements)), 0.0);
    return {marked_index, std::vector<Complex>(static_cast<std::size_t>(n_elements), amp)};
}

// Oracle query: sign flip on the marked amplitude.
inline FullState apply_oracle_u(FullState state) {
    detail::check_marked(state.size(), state.marked_index, "apply_oracle_u");
    state.amplitudes[static_cast<std::size_t>(state.marked_index)] *= -1.0;
    return state;
}

// Diffusion: reflection about the uniform superposition, psi -> 2m - psi with
// m the mean amplitude.
inline FullState apply_diffusion_v(FullState state) {
    const std::int64_t n = state.size();
    if (n < 2) throw std::invalid_argument("apply_diffusion_v: state too small");
    const Complex sum =
        std::accumulate(state.amplitudes.begin(), state.amplitudes.end(), Complex{});
    const Complex twice_mean = sum * (2.0 / static_cast<double>(n));
    for (Complex& a : state.amplitudes) a = twice_mean - a;
    return state;
}

// k full amplification iterations, oracle then diffusion each time.
inline FullState grover_iterate(FullState state, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("grover_iterate: k must be >= 0");
    for (std::int64_t i = 0; i < k; ++i)
        state = apply_diffusion_v(apply_oracle_u(std::move(state)));
    return state;
}

inline double probability_of(const FullState& state, std::int64_t index) {
    if (index < 0 || index >= state.size())
        throw std::invalid_argument("probability_of: index out of range");
    return std::norm(state.amplitudes[static_cast<std::size_t>(index)]);
}

inline double probability_of_marked(const FullState& state) {
    return probability_of(state, state.marked_index);
}

// Dense N x N density matrix, row-major, with the marked index it was built
// around.
struct FullDensity {
    std::int64_t n_elements = 0;
    std::int64_t marked_index = 0;
    std::vector<Complex> matrix;  // row-major, n_elements^2 entries

    Complex& at(std::int64_t i, std::int64_t j) {
        return matrix[static_cast<std::size_t>(i * n_elements + j)];
    }
    const Complex& at(std::int64_t i, std::int64_t j) const {
        return matrix[static_cast<std::size_t>(i * n_elements + j)];
    }
};

inline FullDensity density_from_state(const FullState& state) {
    const std::int64_t n = state.size();
    detail::check_elements(n, max_density_elements, "density_from_state");
    detail::check_marked(n, state.marked_index, "density_from_state");
    FullDensity rho{n, state.marked_index,
                    std::vector<Complex>(static_cast<std::size_t>(n * n))};
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            rho.at(i, j) = state.amplitudes[static_cast<std::size_t>(i)] *
                           std::conj(state.amplitudes[static_cast<std::size_t>(j)]);
    return rho;
}

// Complete dephasing on the {marked, rest} pair: the pinching
//   rho -> Pa rho Pa + Pb rho Pb + Pc rho Pc
// with Pa = |a><a| the marked projector, Pb = |b><b| the projector onto the
// uniform superposition b of the unmarked elements, and Pc the rest. Applied
// as a rank-one update using row/column aggregates, O(N^2) overall.
inline FullDensity dephase_ab(FullDensity rho) {
    const std::int64_t n = rho.n_elements;
    detail::check_elements(n, max_density_elements, "dephase_ab");
    detail::check_marked(n, rho.marked_index, "dephase_ab");
    if (static_cast<std::int64_t>(rho.matrix.size()) != n * n)
        throw std::invalid_argument("dephase_ab: matrix size does not match n_elements");

    const std::int64_t a = rho.marked_index;
    const double ib = 1.0 / std::sqrt(static_cast<double>(n - 1));  // b entries

    // Aggregates of the input matrix against |a> and |b>.
    std::vector<Complex> ra(static_cast<std::size_t>(n));  // rho |a>
    std::vector<Complex> ar(static_cast<std::size_t>(n));  // <a| rho
    std::vector<Complex> rb(static_cast<std::size_t>(n));  // rho |b>
    std::vector<Complex> br(static_cast<std::size_t>(n));  // <b| rho
    for (std::int64_t i = 0; i < n; ++i) {
        ra[static_cast<std::size_t>(i)] = rho.at(i, a);
        ar[static_cast<std::size_t>(i)] = rho.at(a, i);
        Complex row_sum{};
        for (std::int64_t j = 0; j < n; ++j)
            if (j != a) row_sum += rho.at(i, j);
        rb[static_cast<std::size_t>(i)] = row_sum * ib;
    }
    for (std::int64_t j = 0; j < n; ++j) {
        Complex col_sum{};
        for (std::int64_t i = 0; i < n; ++i)
            if (i != a) col_sum += rho.at(i, j);
        br[static_cast<std::size_t>(j)] = col_sum * ib;
    }
    const Complex aa = rho.at(a, a);
    const Complex ab = rb[static_cast<std::size_t>(a)];  // <a| rho |b>
    const Complex ba = br[static_cast<std::size_t>(a)];  // <b| rho |a>
    Complex bb{};                                        // <b| rho |b>
    for (std::int64_t i = 0; i < n; ++i)
        if (i != a) bb += rb[static_cast<std::size_t>(i)];
    bb *= ib;

    // rho_bar = rho - |a><a|rho - |b><b|rho - rho|a><a| - rho|b><b|
    //         + 2 aa |a><a| + 2 bb |b><b| + ab |a><b| + ba |b><a|
    // which equals the pinching for Pc = 1 - Pa - Pb.
    for (std::int64_t i = 0; i < n; ++i) {
        const double bi = (i == a) ? 0.0 : ib;
        for (std::int64_t j = 0; j < n; ++j) {
            const double bj = (j == a) ? 0.0 : ib;
            Complex v = rho.at(i, j);
            if (i == a) v -= ar[static_cast<std::size_t>(j)];
            v -= bi * br[static_cast<std::size_t>(j)];
            if (j == a) v -= ra[static_cast<std::size_t>(i)];
            v -= rb[static_cast<std::size_t>(i)] * bj;
            if (i == a && j == a) v += 2.0 * aa;
            v += 2.0 * bb * (bi * bj);
            if (i == a) v += ab * bj;
            if (j == a) v += ba * bi;
            rho.at(i, j) = v;
        }
    }
    return rho;
}

// One amplification iteration conjugated onto a density matrix:
// rho -> (VU) rho (VU)^T with U the marked sign flip and V the reflection
// about the uniform superposition (both real symmetric).
inline FullDensity grover_conjugate(FullDensity rho) {
    const std::int64_t n = rho.n_elements;
    detail::check_elements(n, max_density_elements, "grover_conjugate");
    detail::check_marked(n, rho.marked_index, "grover_conjugate");
    const std::int64_t a = rho.marked_index;

    // U rho U: negate the marked row and column; the diagonal entry is hit twice.
    for (std::int64_t i = 0; i < n; ++i) {
        if (i == a) continue;
        rho.at(i, a) *= -1.0;
        rho.at(a, i) *= -1.0;
    }

    // V rho V with V = (2/N) J - I expands into row sums, column sums and the
    // grand total of the input.
    std::vector<Complex> row(static_cast<std::size_t>(n));
    std::vector<Complex> col(static_cast<std::size_t>(n));
    Complex total{};
    for (std::int64_t i = 0; i < n; ++i) {
        Complex r{};
        for (std::int64_t j = 0; j < n; ++j) {
            const Complex v = rho.at(i, j);
            r += v;
            col[static_cast<std::size_t>(j)] += v;
        }
        row[static_cast<std::size_t>(i)] = r;
        total += r;
    }
    const double two_over_n = 2.0 / static_cast<double>(n);
    const Complex mean_term = total * (two_over_n * two_over_n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            rho.at(i, j) += mean_term - two_over_n * (row[static_cast<std::size_t>(i)] +
                                                      col[static_cast<std::size_t>(j)]);
    return rho;
}

// Fully dephased evolution from the uniform superposition: dephase, then k
// rounds of (iterate, dephase), tracking the complete N x N density matrix.
// Returns the final population of the marked element. Deliberately brute
// force; sizes and step counts are capped accordingly.
inline double evolve_dephased_full(std::int64_t n_elements, std::int64_t marked_index,
                                   std::int64_t k) {
    detail::check_elements(n_elements, max_density_elements, "evolve_dephased_full");
    detail::check_marked(n_elements, marked_index, "evolve_dephased_full");
    if (k < 0 || k > max_density_steps)
        throw std::invalid_argument("evolve_dephased_full: k out of range");

    FullDensity rho =
        dephase_ab(density_from_state(uniform_state(n_elements, marked_index)));
    for (std::int64_t i = 0; i < k; ++i)
        rho = dephase_ab(grover_conjugate(std::move(rho)));
    return rho.at(marked_index, marked_index).real();
}

// Qubit register view of N = 2^n elements: qubit q corresponds to bit q of
// the basis index, and kept_qubits lists the positions surviving a partial
// trace.
struct QubitFactorization {
    int n_qubits = 0;
    std::vector<int> kept_qubits;
};

struct ReducedDensity {
    std::int64_t dim = 0;
    std::vector<Complex> matrix;  // row-major, dim^2 entries

    const Complex& at(std::int64_t i, std::int64_t j) const {
        return matrix[static_cast<std::size_t>(i * dim + j)];
    }
};

namespace detail {

inline void check_factorization(const FullState& state, const QubitFactorization& f) {
    const int n = f.n_qubits;
    if (n < 1 || n > 24)
        throw std::invalid_argument("reduced_density: n_qubits out of range");
    if (state.size() != (std::int64_t{1} << n))
        throw std::invalid_argument("reduced_density: state size is not 2^n_qubits");
    if (f.kept_qubits.empty() ||
        f.kept_qubits.size() >= static_cast<std::size_t>(n))
        throw std::invalid_argument(
            "reduced_density: kept_qubits must be a nonempty strict subset");
    std::vector<int> sorted = f.kept_qubits;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n)
            throw std::invalid_argument("reduced_density: qubit position out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("reduced_density: duplicate qubit position");
    }
}

// Scatter the low bits of `value` over the given bit positions.
inline std::int64_t scatter_bits(std::int64_t value, const std::vector<int>& positions) {
    std::int64_t out = 0;
    for (std::size_t b = 0; b < positions.size(); ++b)
        out |= ((value >> b) & 1) << positions[b];
    return out;
}

}  // namespace detail

// Partial trace over the discarded qubits of a pure state, returning the
// reduced density matrix on the kept ones.
inline ReducedDensity reduced_density(const FullState& state,
                                      const QubitFactorization& f) {
    detail::check_factorization(state, f);
    std::vector<int> kept = f.kept_qubits;
    std::sort(kept.begin(), kept.end());
    std::vector<int> traced;
    for (int q = 0; q < f.n_qubits; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const std::int64_t dim = std::int64_t{1} << kept.size();
    const std::int64_t env = std::int64_t{1} << traced.size();
    ReducedDensity red{dim, std::vector<Complex>(static_cast<std::size_t>(dim * dim))};
    for (std::int64_t i = 0; i < dim; ++i) {
        const std::int64_t base_i = detail::scatter_bits(i, kept);
        for (std::int64_t j = 0; j < dim; ++j) {
            const std::int64_t base_j = detail::scatter_bits(j, kept);
            Complex sum{};
            for (std::int64_t e = 0; e < env; ++e) {
                const std::int64_t rest = detail::scatter_bits(e, traced);
                sum += state.amplitudes[static_cast<std::size_t>(base_i | rest)] *
                       std::conj(state.amplitudes[static_cast<std::size_t>(base_j | rest)]);
            }
            red.matrix[static_cast<std::size_t>(i * dim + j)] = sum;
        }
    }
    return red;
}

inline double purity(const ReducedDensity& red) {
    double sum = 0.0;
    for (const Complex& v : red.matrix) sum += std::norm(v);
    return sum;
}

// A pure state is entangled across the given bipartition exactly when the
// reduced state is mixed; numerically, when its purity falls below 1 by more
// than the tolerance.
inline bool is_entangled(const FullState& state, const QubitFactorization& f,
                         double tolerance = 1e-9) {
    if (!(tolerance > 0.0))
        throw std::invalid_argument("is_entangled: tolerance must be > 0");
    return purity(reduced_density(state, f)) < 1.0 - tolerance;
}

}  // namespace groversim
