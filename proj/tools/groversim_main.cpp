// Command-line front end: evaluate success probabilities, locate threshold
// crossings, sweep problem sizes, scan entanglement, and run the cross-route
// validation suite.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 I/O error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groversim/groversim.hpp"

namespace {

using namespace groversim;

struct PointOptions {
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    std::optional<double> threshold;
    std::int64_t max_steps = 1'000'000;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "csv";
};

void emit(const std::vector<ResultRow>& rows, const std::string& format,
          const std::string& output) {
    const std::string text = render_rows(rows, format);
    if (output.empty())
        std::cout << text;
    else
        write_text_file(output, text);
}

// Replace an exact probability by the observed frequency over a finite number
// of measurement shots.
double sample_probability(double p, std::int64_t shots, std::uint64_t seed) {
    if (shots > 100'000'000)
        throw config_error("--shots is capped at 1e8");
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::int64_t> dist(shots, p);
    return static_cast<double>(dist(rng)) / static_cast<double>(shots);
}

int run_point(Mode mode, const PointOptions& opt) {
    std::vector<ResultRow> rows;
    if (opt.k) {
        double p = mode_probability(mode, opt.n, *opt.k);
        if (opt.shots > 0) p = sample_probability(p, opt.shots, opt.seed);
        rows.push_back({mode, opt.n, *opt.k, p, std::nullopt, std::nullopt});
    } else {
        const double threshold =
            opt.threshold.value_or(is_dephased(mode) ? 0.25 : 0.5);
        SweepPoint pt = find_k_star(mode, opt.n, threshold, opt.max_steps);
        if (opt.shots > 0)
            pt.probability_at_k_star =
                sample_probability(pt.probability_at_k_star, opt.shots, opt.seed);
        rows.push_back(row_from_point(mode, pt, threshold));
    }
    emit(rows, opt.format, opt.output);
    return 0;
}

int run_sweep_command(const std::string& config_path, const SweepConfig& flag_cfg,
                      bool sizes_given, const std::string& output,
                      const std::string& format, unsigned threads) {
    SweepConfig cfg;
    if (!config_path.empty()) {
        cfg = load_config(config_path);
    } else {
        if (!sizes_given)
            throw config_error("sweep: provide --config or --sizes");
        cfg = flag_cfg;
        validate_config(cfg);
    }
    if (!output.empty()) cfg.output_path = output;

    const std::vector<SweepPoint> points = run_sweep(cfg, threads);
    const std::string text =
        render_rows(rows_from_points(cfg.mode, points, cfg.threshold), format);
    if (cfg.output_path.empty()) {
        std::cout << text;
        return 0;
    }
    write_text_file(cfg.output_path, text);

    std::size_t usable = 0;
    for (const SweepPoint& p : points)
        if (p.k_star > 0) ++usable;
    std::cout << "wrote " << points.size() << " points to " << cfg.output_path << "\n";
    if (usable >= 3) {
        const FitResult fit = fit_scaling(points);
        std::printf("fit: k* ~ N^%.4f  (intercept %.4f, r^2 %.6f, %zu excluded)\n",
                    fit.slope, fit.intercept, fit.r_squared, fit.excluded_points);
    }
    return 0;
}

// Entanglement scan across one oscillation period: one row per iteration and
// single-qubit bipartition, with the angle-criterion prediction alongside the
// measured purity.
int run_entangle(std::int64_t n, std::int64_t marked, const std::string& output,
                 const std::string& format) {
    if (n < 4 || n > max_density_elements || (n & (n - 1)) != 0)
        throw config_error("entangle: --n must be a power of two in [4, 4096]");
    int nq = 0;
    while ((std::int64_t{1} << nq) < n) ++nq;
    const GroverGeometry g = make_geometry(n);
    const std::int64_t period = static_cast<std::int64_t>(std::llround(pi / g.theta));

    std::string csv = "n,k,qubit,p_success,purity,entangled,predicted\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    FullState s = uniform_state(n, marked);
    for (std::int64_t k = 0; k <= period; ++k) {
        const double sin_2k = std::sin(2.0 * static_cast<double>(k) * g.theta);
        const double cos_2k1 = std::cos(static_cast<double>(2 * k + 1) * g.theta);
        const bool predicted = std::abs(sin_2k) > 1e-9 && std::abs(cos_2k1) > 1e-9;
        const double p = probability_of_marked(s);
        for (int q = 0; q < nq; ++q) {
            const QubitFactorization f{nq, {q}};
            const double pur = purity(reduced_density(s, f));
            const bool ent = is_entangled(s, f);
            if (format == "json") {
                nlohmann::ordered_json row;
                row["n"] = n;
                row["k"] = k;
                row["qubit"] = q;
                row["p_success"] = p;
                row["purity"] = pur;
                row["entangled"] = ent;
                row["predicted"] = predicted;
                arr.push_back(std::move(row));
            } else {
                csv += std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(q) + "," + format_double(p) + "," +
                       format_double(pur) + "," + (ent ? "1" : "0") + "," +
                       (predicted ? "1" : "0") + "\n";
            }
        }
        s = apply_diffusion_v(apply_oracle_u(std::move(s)));
    }
    const std::string text = format == "json" ? arr.dump(2) + "\n" : csv;
    if (output.empty())
        std::cout << text;
    else
        write_text_file(output, text);
    return 0;
}

int run_validate(std::int64_t max_n) {
    const ValidationReport report = validate_all(max_n);
    for (const CheckResult& c : report.checks)
        std::printf("[%s] %-45s max_dev %.3e  tol %.3e\n", c.passed ? "PASS" : "FAIL",
                    c.name.c_str(), c.max_deviation, c.tolerance);
    if (!report.all_passed()) {
        std::fprintf(stderr, "validation failed\n");
        return 1;
    }
    std::printf("all checks passed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent vs dephased amplification dynamics"};
    app.require_subcommand(1);

    PointOptions popt;
    auto add_point_options = [&](CLI::App* cmd, bool n_required = true) {
        CLI::Option* n_opt = cmd->add_option("--n", popt.n, "problem size N");
        if (n_required) n_opt->required();
        cmd->add_option("--k", popt.k, "evaluate after exactly k iterations");
        cmd->add_option("--threshold", popt.threshold,
                        "find the first k reaching this probability");
        cmd->add_option("--max-steps", popt.max_steps, "search cap for --threshold");
        cmd->add_option("--shots", popt.shots,
                        "sample the probability with this many measurement shots");
        cmd->add_option("--seed", popt.seed, "RNG seed for --shots");
        cmd->add_option("--output", popt.output, "write results here instead of stdout");
        cmd->add_option("--format", popt.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* quantum = app.add_subcommand("quantum", "coherent amplification");
    add_point_options(quantum);

    CLI::App* classical = app.add_subcommand("classical", "fully dephased amplification");
    add_point_options(classical);

    CLI::App* analog = app.add_subcommand("analog", "continuous-time two-level search");
    add_point_options(analog, /*n_required=*/false);
    bool analog_dephased_flag = false;
    analog->add_flag("--dephased", analog_dephased_flag,
                     "chop the evolution into dephased slices");
    std::optional<double> analog_x;
    std::optional<double> analog_t;
    double analog_energy = 1.0;
    double analog_dt = 1.0;
    analog->add_option("--x", analog_x, "initial overlap (default 1/sqrt(N))");
    analog->add_option("--energy", analog_energy, "energy scale E");
    analog->add_option("--dt", analog_dt, "slice duration");
    analog->add_option("--t", analog_t, "evaluate the coherent evolution at time t");

    CLI::App* sweep = app.add_subcommand("sweep", "threshold crossings over many sizes");
    std::string sweep_config;
    std::string sweep_mode = "quantum";
    std::vector<std::int64_t> sweep_sizes;
    std::optional<double> sweep_threshold;
    std::int64_t sweep_max_steps = 1'000'000;
    std::string sweep_output;
    std::string sweep_format = "csv";
    unsigned sweep_threads = 1;
    sweep->add_option("--config", sweep_config, "JSON config file");
    sweep->add_option("--mode", sweep_mode,
                      "quantum | classical | analog-coherent | analog-dephased");
    sweep->add_option("--sizes", sweep_sizes, "problem sizes, strictly increasing");
    sweep->add_option("--threshold", sweep_threshold, "target probability");
    sweep->add_option("--max-steps", sweep_max_steps, "search cap per size");
    sweep->add_option("--output", sweep_output, "output file (overrides config)");
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--threads", sweep_threads, "worker threads");

    CLI::App* entangle =
        app.add_subcommand("entangle", "entanglement scan over one oscillation period");
    std::int64_t ent_n = 0;
    std::int64_t ent_marked = 0;
    std::string ent_output;
    std::string ent_format = "csv";
    entangle->add_option("--n", ent_n, "problem size N = 2^q")->required();
    entangle->add_option("--marked", ent_marked, "marked element index");
    entangle->add_option("--output", ent_output, "write results here instead of stdout");
    entangle->add_option("--format", ent_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* validate = app.add_subcommand("validate", "cross-route validation suite");
    std::int64_t validate_max_n = 1024;
    validate->add_option("--n", validate_max_n, "largest dense problem size");

    try {
        app.parse(argc, argv);

        if (quantum->parsed()) return run_point(Mode::quantum, popt);
        if (classical->parsed()) return run_point(Mode::classical, popt);
        if (analog->parsed()) {
            // Custom overlap/time evaluations bypass the size-derived mode
            // table; threshold searches use the standard x = 1/sqrt(N).
            if (analog_x || analog_t) {
                if (!analog_x && popt.n < 2)
                    throw config_error(
                        "analog: --t without --x needs --n to derive the overlap");
                const AnalogParams p = make_analog_params(
                    analog_x.value_or(1.0 / std::sqrt(static_cast<double>(popt.n))),
                    analog_energy, analog_dt);
                double value = 0.0;
                std::int64_t k_col = 0;
                if (analog_t) {
                    value = coherent_success(p, *analog_t);
                } else if (popt.k) {
                    k_col = *popt.k;
                    value = analog_dephased_flag
                                ? analog_closed_form_w(p, *popt.k)
                                : coherent_success(
                                      p, static_cast<double>(*popt.k) * p.dt);
                } else {
                    throw config_error("analog: provide --k or --t with --x");
                }
                if (popt.shots > 0)
                    value = sample_probability(value, popt.shots, popt.seed);
                std::vector<ResultRow> rows{{analog_dephased_flag
                                                 ? Mode::analog_dephased
                                                 : Mode::analog_coherent,
                                             popt.n, k_col, value, std::nullopt,
                                             std::nullopt}};
                emit(rows, popt.format, popt.output);
                return 0;
            }
            if (popt.n < 2)
                throw config_error("analog: --n is required unless --x is given");
            return run_point(analog_dephased_flag ? Mode::analog_dephased
                                                  : Mode::analog_coherent,
                             popt);
        }
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.mode = mode_from_string(sweep_mode);
            cfg.sizes = sweep_sizes;
            cfg.threshold =
                sweep_threshold.value_or(is_dephased(cfg.mode) ? 0.25 : 0.5);
            cfg.max_steps = sweep_max_steps;
            return run_sweep_command(sweep_config, cfg, !sweep_sizes.empty(),
                                     sweep_output, sweep_format, sweep_threads);
        }
        if (entangle->parsed())
            return run_entangle(ent_n, ent_marked, ent_output, ent_format);
        if (validate->parsed()) return run_validate(validate_max_n);
        throw config_error("no subcommand selected");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 3;
    } catch (const config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
