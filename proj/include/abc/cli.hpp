#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "abc/benchmarks.hpp"
#include "abc/colony.hpp"
#include "abc/config.hpp"
#include "abc/errors.hpp"
#include "abc/etv/scheduling.hpp"

namespace abc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumeric = 4;

namespace detail {

inline std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path.string());
    return os;
}

inline void make_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
}

inline ColonyConfig colony_config(const ExperimentConfig& cfg, Strategy strategy) {
    ColonyConfig cc;
    cc.swarm_size = cfg.swarm;
    cc.dims = cfg.dims;
    cc.limit = cfg.limit;
    cc.max_iters = cfg.iters;
    cc.strategy = strategy;
    cc.workers = cfg.workers;
    cc.seed = cfg.seed;
    return cc;
}

inline void write_convergence_csv(std::ostream& os, const RunResult& run) {
    os << "iteration,best_value\n";
    for (const auto& [iter, best] : run.history) os << iter << ',' << fmt("%.12g", best) << '\n';
}

}  // namespace detail

/// `matrix`: dump the travel time-cost matrix (8 x 60 displacements) as CSV.
inline int cmd_matrix(const ExperimentConfig& cfg) {
    const etv::KinematicParams params = cfg.kinematics_path.empty()
                                            ? etv::KinematicParams::calibrated()
                                            : load_kinematics_file(cfg.kinematics_path);
    const etv::TimeMatrix matrix = etv::build_time_matrix(params);
    if (cfg.out_path.empty()) {
        matrix.write_csv(std::cout);
    } else {
        auto os = detail::open_out(cfg.out_path);
        matrix.write_csv(os);
    }
    return kExitOk;
}

/// `bench`: campaign of seeded trials per strategy on one benchmark function.
/// Writes out/stats.csv plus one convergence CSV per trial.
inline int cmd_bench(const ExperimentConfig& cfg) {
    validate_common(cfg);
    const bench::BenchmarkFunction* fn = bench::find(cfg.function);
    if (!fn) {
        std::string names;
        for (const auto& f : bench::suite()) names += std::string(names.empty() ? "" : ", ") + std::string(f.name);
        throw std::invalid_argument("unknown function '" + cfg.function + "' (valid: " + names + ")");
    }
    const Bounds bounds = fn->bounds(cfg.dims);
    detail::make_out_dir(cfg.out_path);
    const std::filesystem::path out(cfg.out_path);

    auto stats = detail::open_out(out / "stats.csv");
    stats << "# variance_best: population variance over per-trial best values\n"
          << "# runtimes: seconds around the optimizer loop only (monotonic clock)\n"
          << "function,strategy,dims,average_runtime_s,average_best,best_best,shortest_runtime_s,"
             "variance_best\n";

    for (const Strategy strategy : selected_strategies(cfg.strategy)) {
        const bench::Campaign campaign =
            bench::run_campaign(fn->evaluate, bounds, detail::colony_config(cfg, strategy),
                                cfg.trials, cfg.seed);
        const bench::TrialStats& s = campaign.stats;
        stats << fn->name << ',' << strategy_name(strategy) << ',' << cfg.dims << ','
              << detail::fmt("%.6f", s.average_runtime_s) << ',' << detail::fmt("%.12g", s.average_best)
              << ',' << detail::fmt("%.12g", s.best_best) << ','
              << detail::fmt("%.6f", s.shortest_runtime_s) << ','
              << detail::fmt("%.12g", s.variance_best) << '\n';
        for (std::size_t t = 0; t < campaign.runs.size(); ++t) {
            const std::string name = "convergence_" + std::string(fn->name) + "_" +
                                     strategy_name(strategy) + "_t" + std::to_string(t + 1) + ".csv";
            auto os = detail::open_out(out / name);
            detail::write_convergence_csv(os, campaign.runs[t]);
        }
        std::cout << "bench " << fn->name << ' ' << strategy_name(strategy) << " dims=" << cfg.dims
                  << " trials=" << cfg.trials << " best=" << detail::fmt("%.6g", s.best_best)
                  << " avg=" << detail::fmt("%.6g", s.average_best)
                  << " avg_runtime_s=" << detail::fmt("%.3f", s.average_runtime_s) << '\n';
    }
    return kExitOk;
}

/// `schedule`: optimize the task sequence; per-trial results, a Min/Max/Avg/CPU
/// summary and the best trial's schedule report per strategy.
inline int cmd_schedule(const ExperimentConfig& cfg) {
    validate_common(cfg);

    const etv::KinematicParams params = cfg.kinematics_path.empty()
                                            ? etv::KinematicParams::calibrated()
                                            : load_kinematics_file(cfg.kinematics_path);
    etv::WarehouseLayout layout =
        cfg.layout_path.empty() ? etv::WarehouseLayout::standard() : etv::load_layout_file(cfg.layout_path);
    std::vector<etv::Task> tasks;
    if (cfg.tasks_path.empty()) {
        tasks = etv::standard_tasks();
        for (const int id : etv::reconstructed_standard_task_ids())
            std::cerr << "warning: embedded task " << id << " uses a reconstructed cell, not sourced data\n";
    } else {
        tasks = etv::load_tasks_file(cfg.tasks_path);
    }

    const auto instance = std::make_shared<const etv::ScheduleInstance>(
        etv::ScheduleInstance::from_parts(std::move(layout), std::move(tasks), params));
    const std::size_t dims = instance->tasks.size();
    const Bounds bounds = etv::schedule_key_bounds(dims);
    const auto objective = etv::make_objective(instance);

    detail::make_out_dir(cfg.out_path);
    const std::filesystem::path out(cfg.out_path);
    auto trials_csv = detail::open_out(out / "trials.csv");
    trials_csv << "strategy,trial,runtime_s,best_total_s\n";
    auto summary_csv = detail::open_out(out / "summary.csv");
    summary_csv << "strategy,min_s,max_s,avg_s,cpu_s\n";

    for (const Strategy strategy : selected_strategies(cfg.strategy)) {
        ColonyConfig cc = detail::colony_config(cfg, strategy);
        cc.dims = dims;
        const bench::Campaign campaign = bench::run_campaign(objective, bounds, cc, cfg.trials, cfg.seed);

        for (std::size_t t = 0; t < campaign.runs.size(); ++t)
            trials_csv << strategy_name(strategy) << ',' << t + 1 << ','
                       << detail::fmt("%.6f", campaign.runs[t].wall_time_s) << ','
                       << detail::fmt("%.6f", campaign.runs[t].best_value) << '\n';

        const auto best_it = std::min_element(
            campaign.runs.begin(), campaign.runs.end(),
            [](const RunResult& a, const RunResult& b) { return a.best_value < b.best_value; });
        const bench::TrialStats& s = campaign.stats;
        const double max_best = *std::max_element(campaign.trial_bests.begin(), campaign.trial_bests.end());
        summary_csv << strategy_name(strategy) << ',' << detail::fmt("%.6f", s.best_best) << ','
                    << detail::fmt("%.6f", max_best) << ',' << detail::fmt("%.6f", s.average_best)
                    << ',' << detail::fmt("%.6f", s.average_runtime_s) << '\n';

        const etv::ScheduleReport report = etv::evaluate_schedule(best_it->best_position, *instance);
        {
            auto os = detail::open_out(out / ("schedule_" + std::string(strategy_name(strategy)) + ".txt"));
            os << etv::format_report(report, instance->layout);
        }
        {
            auto os = detail::open_out(out / ("schedule_" + std::string(strategy_name(strategy)) + ".csv"));
            etv::write_report_csv(os, report);
        }
        std::cout << "schedule " << strategy_name(strategy) << " trials=" << cfg.trials
                  << " best_total_s=" << detail::fmt("%.3f", s.best_best)
                  << " avg_total_s=" << detail::fmt("%.3f", s.average_best)
                  << " avg_runtime_s=" << detail::fmt("%.3f", s.average_runtime_s) << '\n';
    }
    return kExitOk;
}

inline int dispatch(const ExperimentConfig& cfg) {
    switch (cfg.mode) {
        case Mode::Bench: return cmd_bench(cfg);
        case Mode::Schedule: return cmd_schedule(cfg);
        case Mode::Matrix: return cmd_matrix(cfg);
    }
    return kExitUsage;
}

/// Maps thrown errors onto the documented exit codes, printing the message.
inline int guarded_dispatch(const ExperimentConfig& cfg, std::ostream& err = std::cerr) {
    try {
        return dispatch(cfg);
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const DegeneratePopulationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        // parse/validation/layout problems
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace abc::cli
