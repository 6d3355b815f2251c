#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abc/colony.hpp"
#include "abc/errors.hpp"
#include "abc/etv/kinematics.hpp"

namespace abc::cli {

enum class Mode { Bench, Schedule, Matrix };

/// One experiment: mode defaults overlaid by a config file overlaid by flags.
struct ExperimentConfig {
    Mode mode = Mode::Bench;
    std::string strategy = "abc";  // abc | fdabc | pfdabc | rmdabc | all
    std::size_t dims = 60;
    std::size_t swarm = 200;
    std::size_t limit = 100;
    std::size_t iters = 1000;
    std::size_t trials = 10;
    std::size_t workers = 1;
    std::uint64_t seed = 0;
    std::string function;  // bench mode only
    std::string tasks_path;
    std::string layout_path;
    std::string kinematics_path;
    std::string out_path;
};

inline ExperimentConfig defaults_for(Mode mode) {
    ExperimentConfig cfg;
    cfg.mode = mode;
    switch (mode) {
        case Mode::Bench:
            cfg.iters = 1000;
            cfg.trials = 10;
            cfg.out_path = "out";
            break;
        case Mode::Schedule:
            cfg.iters = 1500;
            cfg.trials = 1;
            cfg.out_path = "out";
            break;
        case Mode::Matrix:
            cfg.out_path = "";  // empty = stdout
            break;
    }
    return cfg;
}

namespace detail {

inline std::uint64_t parse_u64(const std::string& s, const std::string& file, std::size_t line) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected a non-negative integer, got '" + s + "'");
    }
}

inline double parse_double(const std::string& s, const std::string& file, std::size_t line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected a number, got '" + s + "'");
    }
}

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

/// key = value lines; blank lines and #-comments ignored.
template <typename Apply>
void read_key_values(std::istream& is, const std::string& name, Apply&& apply) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError(name, lineno, "expected key = value");
        apply(trim(text.substr(0, eq)), trim(text.substr(eq + 1)), lineno);
    }
}

}  // namespace detail

inline void apply_config_key(ExperimentConfig& cfg, const std::string& key, const std::string& value,
                             const std::string& file, std::size_t line) {
    if (key == "mode") {
        const Mode m = value == "bench"      ? Mode::Bench
                       : value == "schedule" ? Mode::Schedule
                       : value == "matrix"   ? Mode::Matrix
                                             : throw ParseError(file, line, "unknown mode '" + value + "'");
        if (m != cfg.mode)
            throw ParseError(file, line, "config mode '" + value + "' conflicts with the subcommand");
    } else if (key == "strategy") {
        cfg.strategy = value;
    } else if (key == "dims") {
        cfg.dims = detail::parse_u64(value, file, line);
    } else if (key == "swarm") {
        cfg.swarm = detail::parse_u64(value, file, line);
    } else if (key == "limit") {
        cfg.limit = detail::parse_u64(value, file, line);
    } else if (key == "iters") {
        cfg.iters = detail::parse_u64(value, file, line);
    } else if (key == "trials") {
        cfg.trials = detail::parse_u64(value, file, line);
    } else if (key == "workers") {
        cfg.workers = detail::parse_u64(value, file, line);
    } else if (key == "seed") {
        cfg.seed = detail::parse_u64(value, file, line);
    } else if (key == "function") {
        cfg.function = value;
    } else if (key == "tasks") {
        cfg.tasks_path = value;
    } else if (key == "layout") {
        cfg.layout_path = value;
    } else if (key == "kinematics") {
        cfg.kinematics_path = value;
    } else if (key == "out") {
        cfg.out_path = value;
    } else {
        throw ParseError(file, line, "unknown config key '" + key + "'");
    }
}

inline void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config file: " + path);
    detail::read_key_values(is, path, [&](const std::string& k, const std::string& v, std::size_t line) {
        apply_config_key(cfg, k, v, path, line);
    });
}

/// Kinematics file: key = value over accel_x, accel_y, vmax_x, vmax_y,
/// cell_width, cell_height, handling_time. Missing keys keep the calibrated
/// defaults.
inline etv::KinematicParams load_kinematics(std::istream& is, const std::string& name = "kinematics") {
    etv::KinematicParams p = etv::KinematicParams::calibrated();
    detail::read_key_values(is, name, [&](const std::string& k, const std::string& v, std::size_t line) {
        const double value = detail::parse_double(v, name, line);
        if (k == "accel_x")
            p.accel_x = value;
        else if (k == "accel_y")
            p.accel_y = value;
        else if (k == "vmax_x")
            p.vmax_x = value;
        else if (k == "vmax_y")
            p.vmax_y = value;
        else if (k == "cell_width")
            p.cell_width = value;
        else if (k == "cell_height")
            p.cell_height = value;
        else if (k == "handling_time")
            p.handling_time = value;
        else
            throw ParseError(name, line, "unknown kinematics key '" + k + "'");
    });
    p.validate();
    return p;
}

inline etv::KinematicParams load_kinematics_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open kinematics file: " + path);
    return load_kinematics(is, path);
}

inline std::vector<Strategy> selected_strategies(const std::string& name) {
    if (name == "all")
        return {Strategy::SingleDim, Strategy::FullDim, Strategy::ParallelFullDim,
                Strategy::RandomMultiDim};
    if (const auto s = strategy_from_name(name)) return {*s};
    throw std::invalid_argument("unknown strategy '" + name +
                                "' (valid: abc, fdabc, pfdabc, rmdabc, all)");
}

inline void validate_common(const ExperimentConfig& cfg) {
    if (cfg.mode == Mode::Matrix) return;
    if (cfg.dims < 1) throw std::invalid_argument("dims must be >= 1");
    if (cfg.swarm < 2) throw std::invalid_argument("swarm must be >= 2");
    if (cfg.limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (cfg.iters < 1) throw std::invalid_argument("iters must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    selected_strategies(cfg.strategy);
}

}  // namespace abc::cli
