#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "abc/rng.hpp"

namespace abc {

/// Neighborhood search strategy of the employed/onlooker phases.
///   SingleDim       - one random dimension per source (classic behaviour)
///   FullDim         - greedy chain over every dimension
///   ParallelFullDim - FullDim employed phase split across worker threads,
///                     single-dimension onlooker phase
///   RandomMultiDim  - greedy chain over a random subset of dimensions
enum class Strategy { SingleDim, FullDim, ParallelFullDim, RandomMultiDim };

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    static Bounds uniform(std::size_t dims, double lo, double hi) {
        return Bounds{std::vector<double>(dims, lo), std::vector<double>(dims, hi)};
    }

    std::size_t dims() const { return lower.size(); }

    double clamp(double v, std::size_t d) const { return std::clamp(v, lower[d], upper[d]); }

    bool contains(std::span<const double> x) const {
        if (x.size() != dims()) return false;
        for (std::size_t d = 0; d < x.size(); ++d)
            if (x[d] < lower[d] || x[d] > upper[d]) return false;
        return true;
    }

    void validate() const {
        if (lower.empty() || lower.size() != upper.size())
            throw std::invalid_argument("Bounds: lower/upper must be non-empty and equal length");
        for (std::size_t d = 0; d < lower.size(); ++d)
            if (!(lower[d] <= upper[d]))  // also rejects NaN; equal bounds are legal
                throw std::invalid_argument("Bounds: lower must not exceed upper");
    }
};

struct ColonyConfig {
    std::size_t swarm_size = 200;
    std::size_t dims = 0;
    std::size_t limit = 100;
    std::size_t max_iters = 1000;
    Strategy strategy = Strategy::SingleDim;
    std::size_t workers = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (swarm_size < 2) throw std::invalid_argument("ColonyConfig: swarm_size must be >= 2");
        if (dims < 1) throw std::invalid_argument("ColonyConfig: dims must be >= 1");
        if (limit < 1) throw std::invalid_argument("ColonyConfig: limit must be >= 1");
        if (workers < 1) throw std::invalid_argument("ColonyConfig: workers must be >= 1");
    }
};

/// One candidate solution. fitness is kept in lock-step with value.
struct FoodSource {
    std::vector<double> position;
    double value = 0.0;
    double fitness = 0.0;
    std::size_t trial = 0;
};

struct RunResult {
    std::vector<double> best_position;
    double best_value = 0.0;
    std::vector<std::pair<std::size_t, double>> history;  // (iteration, best so far)
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
};

/// Objective returned NaN. Carries the offending source index; run() fills in
/// the iteration before rethrowing.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(std::size_t source)
        : std::runtime_error("objective returned NaN for source " + std::to_string(source)),
          source_(source) {}

    EvaluationError(std::size_t source, std::size_t iteration)
        : std::runtime_error("objective returned NaN for source " + std::to_string(source) +
                             " at iteration " + std::to_string(iteration)),
          source_(source),
          iteration_(iteration) {}

    EvaluationError(const EvaluationError& base, std::size_t trial)
        : std::runtime_error(std::string(base.what()) + " (trial " + std::to_string(trial) + ")"),
          source_(base.source_),
          iteration_(base.iteration_) {}

    std::size_t source_index() const { return source_; }
    std::optional<std::size_t> iteration() const { return iteration_; }

private:
    std::size_t source_;
    std::optional<std::size_t> iteration_;
};

/// Every selection weight is zero; roulette selection is undefined.
class DegeneratePopulationError : public std::runtime_error {
public:
    DegeneratePopulationError() : std::runtime_error("population fitness sum is zero") {}
};

/// Maps an objective value (minimized) to a positive selection weight.
/// Strictly decreasing, so weight comparisons agree with value comparisons.
inline double fitness_transform(double objective_value) {
    if (std::isnan(objective_value)) throw std::domain_error("fitness_transform: NaN input");
    if (objective_value >= 0.0) return 1.0 / (1.0 + objective_value);
    return 1.0 + std::fabs(objective_value);
}

/// Counts objective calls and rejects NaN results. Thread-safe.
template <typename F>
class Evaluator {
public:
    explicit Evaluator(const F& objective) : objective_(objective) {}

    double operator()(std::span<const double> x, std::size_t source) {
        calls_.fetch_add(1, std::memory_order_relaxed);
        const double value = objective_(x);
        if (std::isnan(value)) throw EvaluationError(source);
        return value;
    }

    std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

private:
    const F& objective_;
    std::atomic<std::uint64_t> calls_{0};
};

template <typename F>
Evaluator(const F&) -> Evaluator<F>;

/// x_i with coordinate k moved by rand(-1,1) * (x_ik - x_jk), clamped into
/// bounds. All other coordinates are copied unchanged.
inline std::vector<double> neighbor_move(std::span<const double> x_i, std::span<const double> x_j,
                                         std::size_t k, const Bounds& bounds, Rng& rng) {
    if (k >= x_i.size()) throw std::out_of_range("neighbor_move: dimension index out of range");
    std::vector<double> out(x_i.begin(), x_i.end());
    const double r = rng.symmetric_unit();
    out[k] = bounds.clamp(x_i[k] + r * (x_i[k] - x_j[k]), k);
    return out;
}

/// P_m = fitness_m / sum(fitness).
inline std::vector<double> selection_probabilities(const std::vector<FoodSource>& sources) {
    if (sources.empty()) throw std::invalid_argument("selection_probabilities: empty population");
    double sum = 0.0;
    for (const FoodSource& s : sources) sum += s.fitness;
    if (!(sum > 0.0)) throw DegeneratePopulationError();
    std::vector<double> probs(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) probs[i] = sources[i].fitness / sum;
    return probs;
}

namespace detail {

inline std::vector<std::vector<double>> positions_of(const std::vector<FoodSource>& pop) {
    std::vector<std::vector<double>> snap;
    snap.reserve(pop.size());
    for (const FoodSource& s : pop) snap.push_back(s.position);
    return snap;
}

/// One greedy move on dimension k: draw partner then step size from the
/// source's own stream, accept only strict improvement. Partner coordinates
/// come from the phase-start snapshot, never from live neighbours.
template <typename Eval>
bool greedy_move(FoodSource& src, std::size_t self, const std::vector<std::vector<double>>& snapshot,
                 std::size_t k, const Bounds& bounds, Eval& eval, Rng& rng) {
    const std::size_t j = rng.index_excluding(snapshot.size(), self);
    const double r = rng.symmetric_unit();
    const double base = src.position[k];
    src.position[k] = bounds.clamp(base + r * (base - snapshot[j][k]), k);
    const double value = eval(src.position, self);
    if (value < src.value) {
        src.value = value;
        src.fitness = fitness_transform(value);
        return true;
    }
    src.position[k] = base;
    return false;
}

template <typename Eval>
bool greedy_chain(FoodSource& src, std::size_t self, const std::vector<std::vector<double>>& snapshot,
                  std::span<const std::size_t> dims, const Bounds& bounds, Eval& eval, Rng& rng) {
    bool improved = false;
    for (std::size_t k : dims) improved = greedy_move(src, self, snapshot, k, bounds, eval, rng) || improved;
    return improved;
}

/// Runs fn(i) for every source index, partitioned into contiguous blocks over
/// `workers` threads. fn must touch only source i state. The first pending
/// exception (lowest source index) is rethrown.
template <typename Fn>
void for_each_source(std::size_t n, std::size_t workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t used = std::min(workers, n);
    std::vector<std::exception_ptr> errors(used);
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (std::size_t w = 0; w < used; ++w) {
        const std::size_t begin = n * w / used;
        const std::size_t end = n * (w + 1) / used;
        threads.emplace_back([&, w, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::size_t roulette_pick(const std::vector<double>& probs, Rng& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cumulative += probs[i];
        if (u < cumulative) return i;
    }
    return probs.size() - 1;
}

/// Random subset of [0, dims) of the given size, in draw order.
inline std::vector<std::size_t> random_dims(std::size_t dims, std::size_t count, Rng& rng) {
    std::vector<std::size_t> idx(dims);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t pick = t + static_cast<std::size_t>(rng.below(dims - t));
        std::swap(idx[t], idx[pick]);
    }
    idx.resize(count);
    return idx;
}

template <typename Eval>
void refresh_source(FoodSource& src, std::size_t self, const Bounds& bounds, Eval& eval, Rng& rng) {
    for (std::size_t d = 0; d < bounds.dims(); ++d)
        src.position[d] = rng.uniform(bounds.lower[d], bounds.upper[d]);
    src.value = eval(src.position, self);
    src.fitness = fitness_transform(src.value);
    src.trial = 0;
}

}  // namespace detail

/// swarm_size sources drawn uniformly inside bounds, evaluated, trials zeroed.
/// ParallelFullDim evaluates the initial population across config.workers.
template <typename Eval>
std::vector<FoodSource> init_population(const ColonyConfig& config, const Bounds& bounds, Eval& eval,
                                        RngSet& rng) {
    std::vector<FoodSource> pop(config.swarm_size);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        pop[i].position.resize(bounds.dims());
        for (std::size_t d = 0; d < bounds.dims(); ++d)
            pop[i].position[d] = rng.source[i].uniform(bounds.lower[d], bounds.upper[d]);
    }
    const std::size_t workers = config.strategy == Strategy::ParallelFullDim ? config.workers : 1;
    detail::for_each_source(pop.size(), workers, [&](std::size_t i) {
        pop[i].value = eval(pop[i].position, i);
        pop[i].fitness = fitness_transform(pop[i].value);
        pop[i].trial = 0;
    });
    return pop;
}

/// Employed bee pass. Every source attempts its strategy's move set against a
/// phase-start snapshot; trial resets on any accepted improvement, else grows.
template <typename Eval>
void employed_phase(std::vector<FoodSource>& sources, Strategy strategy, const Bounds& bounds,
                    Eval& eval, RngSet& rng, std::size_t workers = 1) {
    const auto snapshot = detail::positions_of(sources);
    const std::size_t dims = bounds.dims();
    std::vector<std::size_t> all_dims(dims);
    std::iota(all_dims.begin(), all_dims.end(), std::size_t{0});

    auto update_one = [&](std::size_t i) {
        FoodSource& src = sources[i];
        Rng& stream = rng.source[i];
        bool improved = false;
        switch (strategy) {
            case Strategy::SingleDim: {
                const std::size_t k = static_cast<std::size_t>(stream.below(dims));
                improved = detail::greedy_move(src, i, snapshot, k, bounds, eval, stream);
                break;
            }
            case Strategy::FullDim:
            case Strategy::ParallelFullDim:
                improved = detail::greedy_chain(src, i, snapshot, all_dims, bounds, eval, stream);
                break;
            case Strategy::RandomMultiDim: {
                const std::size_t count = 1 + static_cast<std::size_t>(stream.below(dims));
                const auto subset = detail::random_dims(dims, count, stream);
                improved = detail::greedy_chain(src, i, snapshot, subset, bounds, eval, stream);
                break;
            }
        }
        if (improved)
            src.trial = 0;
        else
            ++src.trial;
    };

    const std::size_t used = strategy == Strategy::ParallelFullDim ? workers : 1;
    detail::for_each_source(sources.size(), used, update_one);
}

/// Onlooker bee pass. FullDim re-exploits roulette-selected sources with a
/// full chain; the other strategies exploit source i when a [0,1) draw falls
/// below its selection probability and then apply one single-dimension move.
/// Trial bookkeeping runs only for sources that were actually exploited.
template <typename Eval>
void onlooker_phase(std::vector<FoodSource>& sources, Strategy strategy, const Bounds& bounds,
                    Eval& eval, RngSet& rng) {
    const auto snapshot = detail::positions_of(sources);
    const std::vector<double> probs = selection_probabilities(sources);
    const std::size_t dims = bounds.dims();
    std::vector<std::size_t> all_dims(dims);
    std::iota(all_dims.begin(), all_dims.end(), std::size_t{0});

    if (strategy == Strategy::FullDim) {
        for (std::size_t m = 0; m < sources.size(); ++m) {
            const std::size_t s = detail::roulette_pick(probs, rng.shared);
            const bool improved =
                detail::greedy_chain(sources[s], s, snapshot, all_dims, bounds, eval, rng.source[s]);
            if (improved)
                sources[s].trial = 0;
            else
                ++sources[s].trial;
        }
        return;
    }
    for (std::size_t i = 0; i < sources.size(); ++i) {
        Rng& stream = rng.source[i];
        if (stream.uniform01() < probs[i]) {
            const std::size_t k = static_cast<std::size_t>(stream.below(dims));
            const bool improved = detail::greedy_move(sources[i], i, snapshot, k, bounds, eval, stream);
            if (improved)
                sources[i].trial = 0;
            else
                ++sources[i].trial;
        }
    }
}

/// Scout bee pass: every source whose trial counter exceeded the limit is
/// replaced by a fresh uniform draw. One replacement per source at most.
template <typename Eval>
void scout_phase(std::vector<FoodSource>& sources, const ColonyConfig& config, const Bounds& bounds,
                 Eval& eval, RngSet& rng) {
    for (std::size_t i = 0; i < sources.size(); ++i)
        if (sources[i].trial > config.limit)
            detail::refresh_source(sources[i], i, bounds, eval, rng.source[i]);
}

/// Full optimization loop: init, then employed/onlooker/scout cycles with the
/// running best recorded after each iteration. Deterministic in (config.seed)
/// for every strategy and worker count.
template <typename F>
RunResult run(const F& objective, const Bounds& bounds, const ColonyConfig& config) {
    config.validate();
    bounds.validate();
    if (config.dims != bounds.dims())
        throw std::invalid_argument("run: config.dims does not match bounds");

    Evaluator<F> eval(objective);
    RngSet rng = RngSet::make(config.seed, config.swarm_size);

    const auto start = std::chrono::steady_clock::now();
    std::vector<FoodSource> pop = init_population(config, bounds, eval, rng);

    RunResult result;
    result.best_value = pop.front().value;
    result.best_position = pop.front().position;
    auto track_best = [&](const std::vector<FoodSource>& sources) {
        for (const FoodSource& s : sources) {
            if (s.value < result.best_value) {
                result.best_value = s.value;
                result.best_position = s.position;
            }
        }
    };
    track_best(pop);
    result.history.emplace_back(0, result.best_value);

    for (std::size_t it = 1; it <= config.max_iters; ++it) {
        try {
            employed_phase(pop, config.strategy, bounds, eval, rng, config.workers);
            onlooker_phase(pop, config.strategy, bounds, eval, rng);
            scout_phase(pop, config, bounds, eval, rng);
        } catch (const EvaluationError& e) {
            throw EvaluationError(e.source_index(), it);
        }
        track_best(pop);
        result.history.emplace_back(it, result.best_value);
    }

    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.evaluations = eval.calls();
    return result;
}

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::SingleDim: return "abc";
        case Strategy::FullDim: return "fdabc";
        case Strategy::ParallelFullDim: return "pfdabc";
        case Strategy::RandomMultiDim: return "rmdabc";
    }
    return "?";
}

inline std::optional<Strategy> strategy_from_name(std::string_view name) {
    if (name == "abc") return Strategy::SingleDim;
    if (name == "fdabc") return Strategy::FullDim;
    if (name == "pfdabc") return Strategy::ParallelFullDim;
    if (name == "rmdabc") return Strategy::RandomMultiDim;
    return std::nullopt;
}

}  // namespace abc
