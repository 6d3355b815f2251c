#include <cstdint>
#include <string>

#include <CLI11.hpp>

#include "abc/cli.hpp"
#include "abc/config.hpp"

namespace {

struct Flags {
    std::string config, strategy, function, tasks, layout, kinematics, out;
    std::uint64_t dims = 0, swarm = 0, limit = 0, iters = 0, trials = 0, workers = 0, seed = 0;
};

// Flag presence decides whether a value overrides file/default settings, so
// every option is checked through its CLI11 count.
void add_options(CLI::App* cmd, Flags& f, bool optimizer_flags, bool with_dims = true) {
    cmd->add_option("--config", f.config, "key = value config file (flags override it)");
    cmd->add_option("--kinematics", f.kinematics, "kinematics parameter file");
    cmd->add_option("--out", f.out, "output path");
    if (!optimizer_flags) return;
    cmd->add_option("--strategy", f.strategy, "abc | fdabc | pfdabc | rmdabc | all");
    if (with_dims) cmd->add_option("--dims", f.dims, "problem dimensionality");
    cmd->add_option("--swarm", f.swarm, "number of food sources");
    cmd->add_option("--limit", f.limit, "abandonment threshold");
    cmd->add_option("--iters", f.iters, "iteration budget");
    cmd->add_option("--trials", f.trials, "independent seeded trials");
    cmd->add_option("--workers", f.workers, "worker threads for pfdabc");
    cmd->add_option("--seed", f.seed, "base random seed");
}

void apply_flags(const CLI::App* cmd, const Flags& f, abc::cli::ExperimentConfig& cfg) {
    auto set = [&](const char* name, auto assign) {
        const CLI::Option* opt = cmd->get_option_no_throw(name);
        if (opt && opt->count() > 0) assign();
    };
    set("--strategy", [&] { cfg.strategy = f.strategy; });
    set("--dims", [&] { cfg.dims = f.dims; });
    set("--swarm", [&] { cfg.swarm = f.swarm; });
    set("--limit", [&] { cfg.limit = f.limit; });
    set("--iters", [&] { cfg.iters = f.iters; });
    set("--trials", [&] { cfg.trials = f.trials; });
    set("--workers", [&] { cfg.workers = f.workers; });
    set("--seed", [&] { cfg.seed = f.seed; });
    set("--kinematics", [&] { cfg.kinematics_path = f.kinematics; });
    set("--out", [&] { cfg.out_path = f.out; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"artificial bee colony optimizer with ETV schedule evaluation"};
    app.require_subcommand(1);

    Flags f;
    CLI::App* bench = app.add_subcommand("bench", "run a benchmark campaign");
    add_options(bench, f, true);
    bench->add_option("--function", f.function,
                      "bent_cigar | sum_diff_power | rosenbrock | rastrigin | step");

    // dimensionality in schedule mode is the task count, so no --dims there
    CLI::App* schedule = app.add_subcommand("schedule", "optimize the freight task schedule");
    add_options(schedule, f, true, false);
    schedule->add_option("--tasks", f.tasks, "task set CSV (id,direction,row,layer,column)");
    schedule->add_option("--layout", f.layout, "gate layout CSV (id,kind,row,layer,column)");

    CLI::App* matrix = app.add_subcommand("matrix", "dump the travel time-cost matrix CSV");
    add_options(matrix, f, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : abc::cli::kExitUsage;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    const abc::cli::Mode mode = cmd == bench      ? abc::cli::Mode::Bench
                                : cmd == schedule ? abc::cli::Mode::Schedule
                                                  : abc::cli::Mode::Matrix;

    abc::cli::ExperimentConfig cfg = abc::cli::defaults_for(mode);
    try {
        if (cmd->count("--config") > 0) abc::cli::apply_config_file(cfg, f.config);
        apply_flags(cmd, f, cfg);
        if (cmd == bench && cmd->count("--function") > 0) cfg.function = f.function;
        if (cmd == schedule) {
            if (cmd->count("--tasks") > 0) cfg.tasks_path = f.tasks;
            if (cmd->count("--layout") > 0) cfg.layout_path = f.layout;
        }
    } catch (const abc::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return abc::cli::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return abc::cli::kExitUsage;
    }

    return abc::cli::guarded_dispatch(cfg);
}
