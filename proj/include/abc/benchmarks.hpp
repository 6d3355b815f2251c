#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abc/colony.hpp"

namespace abc::bench {

inline void require_nonempty(std::span<const double> x, const char* fn) {
    if (x.empty()) throw std::domain_error(std::string(fn) + ": empty input");
}

/// f(x) = x_1^2 + 1e6 * sum_{i>=2} x_i^2
inline double bent_cigar(std::span<const double> x) {
    require_nonempty(x, "bent_cigar");
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) tail += x[i] * x[i];
    return x[0] * x[0] + 1e6 * tail;
}

/// f(x) = sum |x_i|^(i+1), exponents 2..D+1. Overflow to +inf is returned
/// as-is; it is a legal (terrible) objective value.
inline double sum_diff_power(std::span<const double> x) {
    require_nonempty(x, "sum_diff_power");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += std::pow(std::fabs(x[i]), static_cast<double>(i + 2));
    return sum;
}

/// f(x) = sum_{i<D} (100 (x_i^2 - x_{i+1})^2 + (x_i - 1)^2). D=1 is the empty sum.
inline double rosenbrock(std::span<const double> x) {
    require_nonempty(x, "rosenbrock");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double coupled = x[i] * x[i] - x[i + 1];
        const double shifted = x[i] - 1.0;
        sum += 100.0 * coupled * coupled + shifted * shifted;
    }
    return sum;
}

/// f(x) = sum (x_i^2 - 10 cos(2 pi x_i) + 10)
inline double rastrigin(std::span<const double> x) {
    require_nonempty(x, "rastrigin");
    double sum = 0.0;
    for (const double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    return sum;
}

/// f(x) = sum (x_i + 0.5)^2
inline double step(std::span<const double> x) {
    require_nonempty(x, "step");
    double sum = 0.0;
    for (const double v : x) {
        const double shifted = v + 0.5;
        sum += shifted * shifted;
    }
    return sum;
}

struct BenchmarkFunction {
    std::string_view name;
    double (*evaluate)(std::span<const double>);
    double range_lo;
    double range_hi;
    double optimum_coord;   // optimum point is (c, c, ..., c)
    double known_optimum;   // minimum value

    Bounds bounds(std::size_t dims) const { return Bounds::uniform(dims, range_lo, range_hi); }
    std::vector<double> optimum_point(std::size_t dims) const {
        return std::vector<double>(dims, optimum_coord);
    }
};

inline const std::array<BenchmarkFunction, 5>& suite() {
    static const std::array<BenchmarkFunction, 5> fns{{
        {"bent_cigar", &bent_cigar, -100.0, 100.0, 0.0, 0.0},
        {"sum_diff_power", &sum_diff_power, -100.0, 100.0, 0.0, 0.0},
        {"rosenbrock", &rosenbrock, -100.0, 100.0, 1.0, 0.0},
        {"rastrigin", &rastrigin, -500.0, 500.0, 0.0, 0.0},
        {"step", &step, -100.0, 100.0, -0.5, 0.0},
    }};
    return fns;
}

inline const BenchmarkFunction* find(std::string_view name) {
    for (const BenchmarkFunction& f : suite())
        if (f.name == name) return &f;
    return nullptr;
}

/// Aggregates over a campaign of independent trials.
struct TrialStats {
    double average_runtime_s = 0.0;
    double shortest_runtime_s = 0.0;
    double average_best = 0.0;
    double best_best = 0.0;
    double variance_best = 0.0;  // population variance over per-trial bests
    std::size_t trials = 0;
};

struct Campaign {
    TrialStats stats;
    std::vector<double> trial_bests;
    std::vector<RunResult> runs;
};

inline TrialStats summarize(const std::vector<RunResult>& runs) {
    TrialStats stats;
    stats.trials = runs.size();
    if (runs.empty()) return stats;
    double sum_best = 0.0, sum_time = 0.0;
    stats.best_best = runs.front().best_value;
    stats.shortest_runtime_s = runs.front().wall_time_s;
    for (const RunResult& r : runs) {
        sum_best += r.best_value;
        sum_time += r.wall_time_s;
        stats.best_best = std::min(stats.best_best, r.best_value);
        stats.shortest_runtime_s = std::min(stats.shortest_runtime_s, r.wall_time_s);
    }
    stats.average_best = sum_best / static_cast<double>(runs.size());
    stats.average_runtime_s = sum_time / static_cast<double>(runs.size());
    double var = 0.0;
    for (const RunResult& r : runs) {
        const double d = r.best_value - stats.average_best;
        var += d * d;
    }
    stats.variance_best = var / static_cast<double>(runs.size());
    return stats;
}

/// `trials` independent runs; trial t uses seed + t, so a campaign is
/// reproducible while its trials stay distinct.
template <typename F>
Campaign run_campaign(const F& objective, const Bounds& bounds, ColonyConfig config,
                      std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("run_campaign: trials must be >= 1");
    Campaign campaign;
    campaign.runs.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        config.seed = seed + t;
        try {
            campaign.runs.push_back(run(objective, bounds, config));
        } catch (const EvaluationError& e) {
            throw EvaluationError(e, t);
        }
        campaign.trial_bests.push_back(campaign.runs.back().best_value);
    }
    campaign.stats = summarize(campaign.runs);
    return campaign;
}

}  // namespace abc::bench
