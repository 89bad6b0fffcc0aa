#pragma once

// Shared helpers for the test suite: random state/density generation and
// independent reference computations (analytic reduced purity, Hermitian
// minimum eigenvalue) used to cross-check the library implementations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "groversim/dense.hpp"

namespace testsupport {

using groversim::Complex;
using groversim::FullDensity;
using groversim::FullState;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline FullState random_state(std::int64_t n, std::int64_t marked, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    FullState s{marked, std::vector<Complex>(static_cast<std::size_t>(n))};
    double norm2 = 0.0;
    for (Complex& a : s.amplitudes) {
        a = Complex(gauss(rng), gauss(rng));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : s.amplitudes) a *= inv;
    return s;
}

// Full-rank random density matrix via the Ginibre construction
// rho = G G^dagger / tr(G G^dagger).
inline FullDensity random_density(std::int64_t n, std::int64_t marked,
                                  std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> g(static_cast<std::size_t>(n * n));
    for (Complex& v : g) v = Complex(gauss(rng), gauss(rng));

    FullDensity rho{n, marked, std::vector<Complex>(static_cast<std::size_t>(n * n))};
    double trace = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            Complex sum{};
            for (std::int64_t k = 0; k < n; ++k)
                sum += g[static_cast<std::size_t>(i * n + k)] *
                       std::conj(g[static_cast<std::size_t>(j * n + k)]);
            rho.at(i, j) = sum;
        }
        trace += rho.at(i, i).real();
    }
    for (Complex& v : rho.matrix) v /= trace;
    return rho;
}

inline Eigen::MatrixXcd to_eigen(const FullDensity& rho) {
    const auto n = static_cast<Eigen::Index>(rho.n_elements);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = rho.at(i, j);
    return m;
}

inline double min_eigenvalue(const FullDensity& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(rho));
    return solver.eigenvalues().minCoeff();
}

inline double trace_real(const FullDensity& rho) {
    double t = 0.0;
    for (std::int64_t i = 0; i < rho.n_elements; ++i) t += rho.at(i, i).real();
    return t;
}

inline double max_abs_diff(const FullDensity& x, const FullDensity& y) {
    double dev = 0.0;
    for (std::size_t i = 0; i < x.matrix.size(); ++i)
        dev = std::max(dev, std::abs(x.matrix[i] - y.matrix[i]));
    return dev;
}

inline double hermiticity_defect(const FullDensity& rho) {
    double dev = 0.0;
    for (std::int64_t i = 0; i < rho.n_elements; ++i)
        for (std::int64_t j = 0; j < rho.n_elements; ++j)
            dev = std::max(dev, std::abs(rho.at(i, j) - std::conj(rho.at(j, i))));
    return dev;
}

// Reduced single-qubit purity of the iterated search state, computed from
// first principles rather than through the partial-trace code under test.
// The state beta|m> + alpha * (uniform over the rest) with the marked element
// at index 0 has, for any single kept qubit, the reduced matrix
//   [ beta^2 + (h-1) alpha^2,  beta alpha sqrt(h') + ... ] -- assembled below
// with h = N/2 elements on each side of the kept bit.
inline double analytic_single_qubit_purity(std::int64_t n, double beta, double alpha) {
    // Marked element 0 has bit value 0 for every qubit, so all single-qubit
    // reductions coincide. Kept-bit-0 block: the marked amplitude plus h-1
    // rest amplitudes; kept-bit-1 block: h rest amplitudes.
    const double h = static_cast<double>(n / 2);
    const double a2 = alpha * alpha / static_cast<double>(n - 1);
    const double rho00 = beta * beta + (h - 1.0) * a2;
    const double rho11 = h * a2;
    // Off-diagonal: sum over matching environment indices pairs the marked
    // amplitude with one rest amplitude and h-1 rest amplitudes with each
    // other.
    const double rho01 =
        beta * alpha / std::sqrt(static_cast<double>(n - 1)) + (h - 1.0) * a2;
    return rho00 * rho00 + rho11 * rho11 + 2.0 * rho01 * rho01;
}

}  // namespace testsupport
