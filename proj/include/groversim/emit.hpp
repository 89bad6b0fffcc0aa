#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sweep.hpp"

namespace groversim {

// Doubles are emitted with 17 significant digits so every value round-trips
// bit-exactly through text.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline constexpr const char* csv_header = "mode,n,k,p_success,k_star,threshold";

// One output record. Sweep rows fill every column; single-point evaluations
// leave k_star and threshold empty (CSV) or null (JSON).
struct ResultRow {
    Mode mode = Mode::quantum;
    std::int64_t n = 0;
    std::int64_t k = 0;
    double p_success = 0.0;
    std::optional<std::int64_t> k_star;
    std::optional<double> threshold;
};

inline ResultRow row_from_point(Mode mode, const SweepPoint& p, double threshold) {
    return {mode, p.n_elements, p.k_star, p.probability_at_k_star, p.k_star, threshold};
}

inline std::vector<ResultRow> rows_from_points(Mode mode,
                                               const std::vector<SweepPoint>& points,
                                               double threshold) {
    std::vector<ResultRow> rows;
    rows.reserve(points.size());
    for (const SweepPoint& p : points) rows.push_back(row_from_point(mode, p, threshold));
    return rows;
}

inline std::string to_csv(const std::vector<ResultRow>& rows) {
    std::string out = csv_header;
    out += '\n';
    for (const ResultRow& r : rows) {
        out += to_string(r.mode);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.k);
        out += ',';
        out += format_double(r.p_success);
        out += ',';
        if (r.k_star) out += std::to_string(*r.k_star);
        out += ',';
        if (r.threshold) out += format_double(*r.threshold);
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<ResultRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ResultRow& r : rows) {
        nlohmann::ordered_json row;
        row["mode"] = to_string(r.mode);
        row["n"] = r.n;
        row["k"] = r.k;
        row["p_success"] = r.p_success;
        if (r.k_star)
            row["k_star"] = *r.k_star;
        else
            row["k_star"] = nullptr;
        if (r.threshold)
            row["threshold"] = *r.threshold;
        else
            row["threshold"] = nullptr;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

inline std::string render_rows(const std::vector<ResultRow>& rows,
                               const std::string& format) {
    if (format == "csv") return to_csv(rows);
    if (format == "json") return to_json(rows);
    throw config_error("unknown output format: " + format);
}

// Sweep configuration as a JSON document using exactly the SweepConfig field
// names. sizes and mode are required; unknown keys are rejected so typos
// surface as configuration errors instead of silently applied defaults.
inline SweepConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw config_error("config: top level must be a JSON object");
    static const char* known[] = {"sizes", "mode",        "threshold",
                                  "max_steps", "output_path", "seed"};
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* key : known) ok = ok || item.key() == key;
        if (!ok) throw config_error("config: unknown key '" + item.key() + "'");
    }
    if (!j.contains("sizes") || !j["sizes"].is_array())
        throw config_error("config: 'sizes' must be an array of integers");
    if (!j.contains("mode") || !j["mode"].is_string())
        throw config_error("config: 'mode' must be a string");

    SweepConfig cfg;
    cfg.sizes.clear();
    for (const auto& v : j["sizes"]) {
        if (!v.is_number_integer())
            throw config_error("config: 'sizes' entries must be integers");
        cfg.sizes.push_back(v.get<std::int64_t>());
    }
    cfg.mode = mode_from_string(j["mode"].get<std::string>());
    cfg.threshold = is_dephased(cfg.mode) ? 0.25 : 0.5;
    if (j.contains("threshold")) {
        if (!j["threshold"].is_number())
            throw config_error("config: 'threshold' must be a number");
        cfg.threshold = j["threshold"].get<double>();
    }
    if (j.contains("max_steps")) {
        if (!j["max_steps"].is_number_integer())
            throw config_error("config: 'max_steps' must be an integer");
        cfg.max_steps = j["max_steps"].get<std::int64_t>();
    }
    if (j.contains("output_path")) {
        if (!j["output_path"].is_string())
            throw config_error("config: 'output_path' must be a string");
        cfg.output_path = j["output_path"].get<std::string>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer())
            throw config_error("config: 'seed' must be an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    validate_config(cfg);
    return cfg;
}

inline SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("config: invalid JSON in " + path + ": " + e.what());
    }
    return config_from_json(j);
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw io_error("failed writing output file: " + path);
}

}  // namespace groversim
