#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "analog.hpp"
#include "dephased.hpp"
#include "grover.hpp"

namespace groversim {

// Configuration problems (bad mode names, malformed config files, invalid
// parameter combinations) are kept distinct from I/O failures so the CLI can
// map them to different exit codes.
class config_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { quantum, classical, analog_coherent, analog_dephased };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::quantum: return "quantum";
        case Mode::classical: return "classical";
        case Mode::analog_coherent: return "analog-coherent";
        case Mode::analog_dephased: return "analog-dephased";
    }
    throw std::invalid_argument("to_string: unknown mode");
}

inline Mode mode_from_string(std::string_view s) {
    if (s == "quantum") return Mode::quantum;
    if (s == "classical") return Mode::classical;
    if (s == "analog-coherent") return Mode::analog_coherent;
    if (s == "analog-dephased") return Mode::analog_dephased;
    throw config_error("unknown mode: " + std::string(s));
}

inline bool is_dephased(Mode m) {
    return m == Mode::classical || m == Mode::analog_dephased;
}

struct SweepConfig {
    std::vector<std::int64_t> sizes;
    Mode mode = Mode::quantum;
    double threshold = 0.5;
    std::int64_t max_steps = 1'000'000;
    std::string output_path;
    std::uint64_t seed = 0;
};

inline void validate_config(const SweepConfig& cfg) {
    if (cfg.sizes.empty()) throw config_error("config: sizes must be nonempty");
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        if (cfg.sizes[i] < 2) throw config_error("config: sizes entries must be >= 2");
        if (i > 0 && cfg.sizes[i] <= cfg.sizes[i - 1])
            throw config_error("config: sizes must be strictly increasing");
    }
    if (!(cfg.threshold > 0.0) || !(cfg.threshold < 1.0))
        throw config_error("config: threshold must lie in (0, 1)");
    if (is_dephased(cfg.mode) && cfg.threshold >= 0.5)
        throw config_error(
            "config: dephased modes saturate at 1/2; threshold must be < 0.5");
    if (cfg.max_steps < 1) throw config_error("config: max_steps must be >= 1");
}

// Sentinel k* for thresholds not reached within max_steps.
inline constexpr std::int64_t k_not_reached = -1;

struct SweepPoint {
    std::int64_t n_elements = 0;
    std::int64_t k_star = k_not_reached;
    double probability_at_k_star = 0.0;  // best probability seen if not reached
    std::int64_t steps_evaluated = 0;
};

// Success probability of the given mode after k steps, problem size n. The
// analog modes use the matched overlap x = 1/sqrt(n) and unit slices E dt = 1.
inline double mode_probability(Mode mode, std::int64_t n_elements, std::int64_t k) {
    switch (mode) {
        case Mode::quantum:
            return success_probability(make_geometry(n_elements), k);
        case Mode::classical:
            return closed_form_c(make_geometry(n_elements), k);
        case Mode::analog_coherent: {
            const AnalogParams p = analog_params_for_size(n_elements);
            return coherent_success(p, static_cast<double>(k) * p.dt);
        }
        case Mode::analog_dephased:
            return analog_closed_form_w(analog_params_for_size(n_elements), k);
    }
    throw std::invalid_argument("mode_probability: unknown mode");
}

namespace detail {

// Geometric-decay description p(k) = 1/2 - (1/2 - c0) ratio^k shared by the
// two dephased modes.
struct TwoStateClosedForm {
    double c0;
    double ratio;
};

inline TwoStateClosedForm two_state_form(Mode mode, std::int64_t n_elements) {
    if (mode == Mode::classical) {
        const GroverGeometry g = make_geometry(n_elements);
        return {1.0 / static_cast<double>(n_elements), std::cos(4.0 * g.theta)};
    }
    const AnalogParams p = analog_params_for_size(n_elements);
    return {p.x * p.x, 1.0 - 2.0 * dephased_transfer(p)};
}

// First crossing for the coherent modes: invert the monotone first branch of
// the oscillation analytically, then confirm by direct evaluation around the
// estimate, falling back to a linear scan when the estimate is off (or when
// the threshold is only reached, if ever, on a later branch).
template <typename Prob>
inline SweepPoint coherent_k_star(std::int64_t n, double threshold,
                                  std::int64_t max_steps, double guess_real,
                                  Prob&& prob) {
    SweepPoint out{n, k_not_reached, 0.0, 0};
    std::int64_t start = 0;
    if (std::isfinite(guess_real) && guess_real > 2.0)
        start = std::min(static_cast<std::int64_t>(guess_real) - 2, max_steps);
    double best = 0.0;
    for (std::int64_t k = start; k <= max_steps; ++k) {
        const double p = prob(k);
        ++out.steps_evaluated;
        best = std::max(best, p);
        if (p >= threshold) {
            out.k_star = k;
            out.probability_at_k_star = p;
            return out;
        }
    }
    out.probability_at_k_star = best;
    return out;
}

}  // namespace detail

// Smallest k with p(k) >= threshold, or the sentinel when max_steps is
// exhausted (or the closed form shows the threshold is unreachable). The
// coherent modes invert the first monotone branch and verify by evaluation;
// the dephased modes binary-search their monotone closed form.
inline SweepPoint find_k_star(Mode mode, std::int64_t n_elements, double threshold,
                              std::int64_t max_steps) {
    if (n_elements < 2) throw config_error("find_k_star: n_elements must be >= 2");
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw config_error("find_k_star: threshold must lie in (0, 1)");
    if (max_steps < 1) throw config_error("find_k_star: max_steps must be >= 1");

    SweepPoint out{n_elements, k_not_reached, 0.0, 0};
    const double p0 = mode_probability(mode, n_elements, 0);
    ++out.steps_evaluated;
    if (p0 >= threshold) {
        out.k_star = 0;
        out.probability_at_k_star = p0;
        return out;
    }

    switch (mode) {
        case Mode::quantum: {
            const GroverGeometry g = make_geometry(n_elements);
            const double alpha = std::asin(std::min(1.0, std::sqrt(threshold)));
            const double guess = std::ceil((alpha / g.theta - 1.0) / 2.0);
            SweepPoint scanned = detail::coherent_k_star(
                n_elements, threshold, max_steps, guess,
                [&](std::int64_t k) { return success_probability(g, k); });
            scanned.steps_evaluated += out.steps_evaluated;
            return scanned;
        }
        case Mode::analog_coherent: {
            const AnalogParams p = analog_params_for_size(n_elements);
            const double u = p.x * p.energy * p.dt;
            const double q = (threshold - p.x * p.x) / (1.0 - p.x * p.x);
            const double guess =
                q > 0.0 ? std::ceil(std::asin(std::min(1.0, std::sqrt(q))) / u) : 0.0;
            SweepPoint scanned = detail::coherent_k_star(
                n_elements, threshold, max_steps, guess, [&](std::int64_t k) {
                    return coherent_success(p, static_cast<double>(k) * p.dt);
                });
            scanned.steps_evaluated += out.steps_evaluated;
            return scanned;
        }
        case Mode::classical:
        case Mode::analog_dephased: {
            const auto form = detail::two_state_form(mode, n_elements);
            const double amp = 0.5 - form.c0;
            auto prob = [&](std::int64_t k) {
                ++out.steps_evaluated;
                return 0.5 - amp * std::pow(form.ratio, static_cast<double>(k));
            };
            if (amp <= 0.0 || form.ratio == 1.0) {
                // Constant sequence; p0 already failed the threshold.
                out.probability_at_k_star = p0;
                return out;
            }
            if (form.ratio < 0.0) {
                // Small sizes oscillate around 1/2; scan, and stop once the
                // decaying envelope can no longer reach the threshold.
                double best = p0;
                for (std::int64_t k = 1; k <= max_steps; ++k) {
                    const double p = prob(k);
                    best = std::max(best, p);
                    if (p >= threshold) {
                        out.k_star = k;
                        out.probability_at_k_star = p;
                        return out;
                    }
                    if (0.5 + amp * std::pow(-form.ratio, static_cast<double>(k)) <
                        threshold)
                        break;
                }
                out.probability_at_k_star = best;
                return out;
            }
            // Monotone increase toward 1/2: check reachability at the cap,
            // then binary search the first crossing.
            double p_hi = prob(max_steps);
            if (p_hi < threshold) {
                out.probability_at_k_star = p_hi;
                return out;
            }
            std::int64_t lo = 0;  // p(lo) < threshold
            std::int64_t hi = max_steps;
            while (hi - lo > 1) {
                const std::int64_t mid = lo + (hi - lo) / 2;
                if (prob(mid) >= threshold)
                    hi = mid;
                else
                    lo = mid;
            }
            out.k_star = hi;
            out.probability_at_k_star = prob(hi);
            return out;
        }
    }
    throw std::invalid_argument("find_k_star: unknown mode");
}

namespace detail {

// Cross-check a solved sweep point by stepping the actual per-iteration map
// (amplitude rotation or stochastic transfer) instead of the closed form.
// Guards the analytic inversion against off-by-one and branch errors; the
// slack only needs to absorb last-bit disagreement between the two routes.
inline void reverify_point(Mode mode, const SweepPoint& pt, double threshold) {
    if (pt.k_star < 0 || pt.k_star > 2'000'000) return;
    constexpr double slack = 1e-9;
    double p_at = 0.0, p_before = -1.0;
    switch (mode) {
        case Mode::quantum: {
            const GroverGeometry g = make_geometry(pt.n_elements);
            TwoLevelState s = initial_plus(g);
            for (std::int64_t k = 0; k < pt.k_star; ++k) {
                if (k == pt.k_star - 1) p_before = std::norm(s.amp_a);
                s = apply_vu(s, g, 1);
            }
            p_at = std::norm(s.amp_a);
            if (pt.k_star == 0) p_before = -1.0;
            break;
        }
        case Mode::classical: {
            const GroverGeometry g = make_geometry(pt.n_elements);
            DephasedWeights w = dephase_initial(g);
            for (std::int64_t k = 0; k < pt.k_star; ++k) {
                if (k == pt.k_star - 1) p_before = w.c;
                w = classical_step(w, g);
            }
            p_at = w.c;
            break;
        }
        case Mode::analog_coherent: {
            const AnalogParams p = analog_params_for_size(pt.n_elements);
            p_at = coherent_success(p, static_cast<double>(pt.k_star) * p.dt);
            if (pt.k_star > 0)
                p_before =
                    coherent_success(p, static_cast<double>(pt.k_star - 1) * p.dt);
            break;
        }
        case Mode::analog_dephased: {
            const AnalogParams p = analog_params_for_size(pt.n_elements);
            const double s = dephased_transfer(p);
            AnalogWeights w = analog_initial(p);
            for (std::int64_t k = 0; k < pt.k_star; ++k) {
                if (k == pt.k_star - 1) p_before = w.w;
                w = analog_step(w, s);
            }
            p_at = w.w;
            break;
        }
    }
    if (p_at < threshold - slack)
        throw std::logic_error("run_sweep: re-verification failed at k*");
    if (p_before >= 0.0 && p_before >= threshold + slack)
        throw std::logic_error("run_sweep: re-verification found an earlier crossing");
}

}  // namespace detail

// Threshold-crossing search over all configured sizes. Results land in a
// pre-sized vector indexed by position, so the output is byte-identical
// regardless of the number of worker threads. Every tenth point is
// re-verified by stepping the underlying map directly.
inline std::vector<SweepPoint> run_sweep(const SweepConfig& cfg, unsigned n_threads = 1) {
    validate_config(cfg);
    std::vector<SweepPoint> out(cfg.sizes.size());
    auto solve = [&](std::size_t i) {
        out[i] = find_k_star(cfg.mode, cfg.sizes[i], cfg.threshold, cfg.max_steps);
        if (i % 10 == 0) detail::reverify_point(cfg.mode, out[i], cfg.threshold);
    };
    if (n_threads <= 1 || cfg.sizes.size() < 2) {
        for (std::size_t i = 0; i < cfg.sizes.size(); ++i) solve(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned workers =
        std::min<unsigned>(n_threads, static_cast<unsigned>(cfg.sizes.size()));
    std::atomic<bool> failed{false};
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cfg.sizes.size();
                 i = next.fetch_add(1)) {
                try {
                    solve(i);
                } catch (...) {
                    failed = true;
                }
            }
        });
    for (std::thread& t : pool) t.join();
    if (failed) throw std::logic_error("run_sweep: re-verification failed");
    return out;
}

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t excluded_points = 0;  // k* undefined or zero, unusable in log-log
};

// Least-squares fit of log k* against log N. Points whose threshold was never
// reached (or reached at k* = 0) carry no scaling information and are counted
// out; at least three usable points are required.
inline FitResult fit_scaling(const std::vector<SweepPoint>& points) {
    std::vector<double> xs, ys;
    FitResult fit;
    for (const SweepPoint& p : points) {
        if (p.k_star <= 0) {
            ++fit.excluded_points;
            continue;
        }
        xs.push_back(std::log(static_cast<double>(p.n_elements)));
        ys.push_back(std::log(static_cast<double>(p.k_star)));
    }
    const std::size_t m = xs.size();
    if (m < 3)
        throw std::invalid_argument(
            "fit_scaling: need at least 3 points with k* >= 1");
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_scaling: all sizes identical");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double pred = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - my) * (ys[i] - my);
    }
    // With an intercept the residual never exceeds the total variance, so
    // r^2 is nonnegative up to rounding; clamp the rounding away.
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return fit;
}

}  // namespace groversim
