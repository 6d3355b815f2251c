#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abc/colony.hpp"
#include "abc/errors.hpp"
#include "abc/etv/kinematics.hpp"

namespace abc::etv {

enum class Direction { Inbound, Outbound };

struct Task {
    int id = 0;
    Direction direction = Direction::Inbound;
    Position cell;
};

struct Gate {
    std::string id;
    Position pos;
};

/// A direction is infeasible (no gates) or a gate layout is inconsistent.
class LayoutError : public std::runtime_error {
public:
    explicit LayoutError(const std::string& what) : std::runtime_error(what) {}
};

struct WarehouseLayout {
    int rows = kRows;
    int layers = kLayers;
    int columns = kColumns;
    std::vector<Gate> entrances;  // inbound pickup points, in id order
    std::vector<Gate> exits;      // outbound delivery points, in id order

    /// The container area's gates: entrances R1..R9 and exits C1..C7.
    static WarehouseLayout standard() {
        WarehouseLayout layout;
        layout.entrances = {
            {"R1", {1, 1, 5}},  {"R2", {2, 1, 15}}, {"R3", {1, 1, 20}},
            {"R4", {1, 1, 25}}, {"R5", {1, 1, 30}}, {"R6", {1, 1, 35}},
            {"R7", {1, 1, 40}}, {"R8", {1, 1, 50}}, {"R9", {1, 1, 60}},
        };
        layout.exits = {
            {"C1", {1, 1, 8}},  {"C2", {1, 1, 18}}, {"C3", {1, 1, 28}}, {"C4", {1, 1, 38}},
            {"C5", {1, 1, 48}}, {"C6", {2, 1, 53}}, {"C7", {1, 1, 58}},
        };
        return layout;
    }

    void validate() const {
        if (entrances.empty() || exits.empty())
            throw LayoutError("layout needs at least one entrance and one exit");
        std::vector<std::string> ids;
        for (const Gate& g : entrances) ids.push_back(g.id);
        for (const Gate& g : exits) ids.push_back(g.id);
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw LayoutError("gate ids must be unique across entrances and exits");
        for (const Gate& g : entrances)
            if (!position_in_bounds(g.pos)) throw LayoutError("entrance " + g.id + " out of bounds");
        for (const Gate& g : exits)
            if (!position_in_bounds(g.pos)) throw LayoutError("exit " + g.id + " out of bounds");
    }
};

/// The embedded sixty-task instance: ids 1-30 inbound, 31-60 outbound.
/// Cells for ids 15, 30, 45 and 60 are reconstructed placeholders, not
/// sourced data; see reconstructed_standard_task_ids().
inline std::vector<Task> standard_tasks() {
    struct Row { int id; char dir; int row, layer, column; };
    static constexpr Row rows[60] = {
        {1, 'I', 1, 5, 34},  {2, 'I', 2, 3, 14},  {3, 'I', 1, 3, 58},  {4, 'I', 1, 5, 26},
        {5, 'I', 1, 5, 30},  {6, 'I', 1, 2, 55},  {7, 'I', 1, 5, 24},  {8, 'I', 1, 4, 40},
        {9, 'I', 1, 5, 40},  {10, 'I', 1, 5, 35}, {11, 'I', 2, 5, 23}, {12, 'I', 1, 7, 43},
        {13, 'I', 1, 3, 48}, {14, 'I', 1, 8, 50}, {15, 'I', 2, 6, 45}, {16, 'I', 1, 8, 44},
        {17, 'I', 2, 8, 32}, {18, 'I', 2, 3, 54}, {19, 'I', 1, 3, 40}, {20, 'I', 1, 4, 60},
        {21, 'I', 1, 3, 20}, {22, 'I', 2, 2, 43}, {23, 'I', 2, 4, 50}, {24, 'I', 1, 6, 10},
        {25, 'I', 2, 7, 20}, {26, 'I', 1, 6, 15}, {27, 'I', 2, 8, 30}, {28, 'I', 2, 2, 45},
        {29, 'I', 1, 7, 58}, {30, 'I', 1, 4, 12}, {31, 'O', 1, 3, 10}, {32, 'O', 1, 5, 55},
        {33, 'O', 1, 5, 25}, {34, 'O', 2, 4, 8},  {35, 'O', 2, 2, 18}, {36, 'O', 2, 1, 16},
        {37, 'O', 2, 3, 51}, {38, 'O', 1, 5, 6},  {39, 'O', 2, 5, 3},  {40, 'O', 1, 6, 12},
        {41, 'O', 2, 6, 13}, {42, 'O', 2, 7, 49}, {43, 'O', 1, 7, 57}, {44, 'O', 1, 5, 25},
        {45, 'O', 2, 5, 44}, {46, 'O', 2, 8, 10}, {47, 'O', 1, 3, 32}, {48, 'O', 1, 4, 50},
        {49, 'O', 2, 3, 38}, {50, 'O', 2, 1, 58}, {51, 'O', 1, 5, 24}, {52, 'O', 1, 4, 30},
        {53, 'O', 2, 6, 40}, {54, 'O', 2, 4, 35}, {55, 'O', 2, 8, 51}, {56, 'O', 2, 2, 30},
        {57, 'O', 1, 2, 60}, {58, 'O', 1, 3, 26}, {59, 'O', 1, 6, 35}, {60, 'O', 1, 2, 60},
    };
    std::vector<Task> tasks;
    tasks.reserve(60);
    for (const Row& r : rows)
        tasks.push_back({r.id, r.dir == 'I' ? Direction::Inbound : Direction::Outbound,
                         {r.row, r.layer, r.column}});
    return tasks;
}

/// Ids in the embedded instance whose cells were reconstructed rather than
/// taken from source data; loaders should surface a warning for these.
inline const std::vector<int>& reconstructed_standard_task_ids() {
    static const std::vector<int> ids{15, 30, 45, 60};
    return ids;
}

/// Everything a schedule evaluation needs, immutable once built.
struct ScheduleInstance {
    WarehouseLayout layout;
    std::vector<Task> tasks;
    KinematicParams params;
    TimeMatrix matrix;
    Position start{1, 1, 1};

    static ScheduleInstance standard(KinematicParams params = KinematicParams::calibrated()) {
        params.validate();
        WarehouseLayout layout = WarehouseLayout::standard();
        TimeMatrix matrix = build_time_matrix(params, static_cast<std::size_t>(layout.layers),
                                              static_cast<std::size_t>(layout.columns));
        return ScheduleInstance{std::move(layout), standard_tasks(), params, std::move(matrix)};
    }

    static ScheduleInstance from_parts(WarehouseLayout layout, std::vector<Task> tasks,
                                       KinematicParams params, Position start = {1, 1, 1}) {
        params.validate();
        layout.validate();
        if (!position_in_bounds(start)) throw std::domain_error("start position out of bounds");
        std::vector<int> ids;
        for (const Task& t : tasks) {
            if (!position_in_bounds(t.cell))
                throw std::domain_error("task " + std::to_string(t.id) + ": cell out of bounds");
            ids.push_back(t.id);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw std::domain_error("duplicate task ids");
        TimeMatrix matrix = build_time_matrix(params, static_cast<std::size_t>(layout.layers),
                                              static_cast<std::size_t>(layout.columns));
        return ScheduleInstance{std::move(layout), std::move(tasks), params, std::move(matrix), start};
    }
};

/// Sort-mapping decode: ascending argsort of the keys. order[r] is the task
/// index executed at rank r; equal keys fall back to the lower task index.
inline std::vector<std::size_t> smc_decode(std::span<const double> keys) {
    for (const double k : keys)
        if (std::isnan(k)) throw std::domain_error("smc_decode: NaN key");
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return a < b;
    });
    return order;
}

struct GateChoice {
    const Gate* gate = nullptr;
    double leg0 = 0.0;  // travel to the cargo
    double leg1 = 0.0;  // travel to the destination
};

/// Cheapest feasible gate for the task from the ETV's current position.
/// Inbound runs gate -> cell, outbound cell -> gate. Cost ties keep the
/// earliest gate in the layout's (id-ordered) list.
inline GateChoice assign_gate(const Task& task, const Position& etv_at, const WarehouseLayout& layout,
                              const TimeMatrix& matrix) {
    const std::vector<Gate>& gates =
        task.direction == Direction::Inbound ? layout.entrances : layout.exits;
    if (gates.empty()) throw LayoutError("no gates for task direction");
    GateChoice best;
    double best_sum = std::numeric_limits<double>::infinity();
    for (const Gate& g : gates) {
        double leg0, leg1;
        if (task.direction == Direction::Inbound) {
            leg0 = matrix.between(etv_at, g.pos);
            leg1 = matrix.between(g.pos, task.cell);
        } else {
            leg0 = matrix.between(etv_at, task.cell);
            leg1 = matrix.between(task.cell, g.pos);
        }
        if (leg0 + leg1 < best_sum) {
            best_sum = leg0 + leg1;
            best = {&g, leg0, leg1};
        }
    }
    return best;
}

struct ScheduleReport {
    std::vector<int> sequence;                   // task ids in execution order
    std::map<int, std::string> gate_assignment;  // task id -> gate id
    std::vector<double> per_task_time;           // seconds, aligned with sequence
    double total_time = 0.0;
};

namespace detail {

/// Walks the decoded order once, threading the ETV position through the
/// tasks. visit(task, choice, cost) runs per task; returns the total.
template <typename Visit>
double walk_schedule(std::span<const std::size_t> order, const ScheduleInstance& inst, Visit&& visit) {
    Position etv = inst.start;
    double total = 0.0;
    for (const std::size_t idx : order) {
        const Task& task = inst.tasks[idx];
        const GateChoice choice = assign_gate(task, etv, inst.layout, inst.matrix);
        const double cost = choice.leg0 + choice.leg1 + 2.0 * inst.params.handling_time;
        total += cost;
        visit(task, choice, cost);
        etv = task.direction == Direction::Inbound ? task.cell : choice.gate->pos;
    }
    return total;
}

}  // namespace detail

inline ScheduleReport evaluate_schedule(std::span<const double> keys, const ScheduleInstance& inst) {
    if (keys.size() != inst.tasks.size())
        throw std::invalid_argument("evaluate_schedule: key count must equal task count");
    const std::vector<std::size_t> order = smc_decode(keys);
    ScheduleReport report;
    report.sequence.reserve(order.size());
    report.per_task_time.reserve(order.size());
    report.total_time =
        detail::walk_schedule(order, inst, [&](const Task& task, const GateChoice& choice, double cost) {
            report.sequence.push_back(task.id);
            report.per_task_time.push_back(cost);
            report.gate_assignment.emplace(task.id, choice.gate->id);
        });
    return report;
}

/// Total-only evaluation; bit-identical to evaluate_schedule().total_time.
inline double schedule_total(std::span<const double> keys, const ScheduleInstance& inst) {
    if (keys.size() != inst.tasks.size())
        throw std::invalid_argument("schedule_total: key count must equal task count");
    const std::vector<std::size_t> order = smc_decode(keys);
    return detail::walk_schedule(order, inst, [](const Task&, const GateChoice&, double) {});
}

/// Search box for the random-key encoding.
inline Bounds schedule_key_bounds(std::size_t task_count, double half_width = 10.0) {
    return Bounds::uniform(task_count, -half_width, half_width);
}

/// Minimization objective over key vectors. Pure; safe to call concurrently.
inline auto make_objective(std::shared_ptr<const ScheduleInstance> inst) {
    return [inst = std::move(inst)](std::span<const double> keys) {
        return schedule_total(keys, *inst);
    };
}

/// Text report: the execution route plus one row per gate listing its tasks
/// in execution order.
inline std::string format_report(const ScheduleReport& report, const WarehouseLayout& layout) {
    std::ostringstream os;
    os << "route:";
    for (const int id : report.sequence) os << ' ' << id;
    os << '\n';
    auto gate_row = [&](const Gate& g) {
        os << g.id << ':';
        for (const int id : report.sequence) {
            const auto it = report.gate_assignment.find(id);
            if (it != report.gate_assignment.end() && it->second == g.id) os << ' ' << id;
        }
        os << '\n';
    };
    for (const Gate& g : layout.entrances) gate_row(g);
    for (const Gate& g : layout.exits) gate_row(g);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", report.total_time);
    os << "total_s: " << buf << '\n';
    return os.str();
}

inline void write_report_csv(std::ostream& os, const ScheduleReport& report) {
    os << "task_id,sequence_position,gate_id,task_time_s\n";
    char buf[32];
    for (std::size_t i = 0; i < report.sequence.size(); ++i) {
        const int id = report.sequence[i];
        std::snprintf(buf, sizeof buf, "%.6f", report.per_task_time[i]);
        os << id << ',' << i + 1 << ',' << report.gate_assignment.at(id) << ',' << buf << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        const auto end = field.find_last_not_of(" \t\r");
        fields.push_back(begin == std::string::npos ? std::string{}
                                                    : field.substr(begin, end - begin + 1));
    }
    return fields;
}

inline int parse_int(const std::string& s, const std::string& file, std::size_t line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(file, line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace detail

/// Task CSV: id,direction,row,layer,column with direction I or O. A header
/// row is recognized and skipped.
inline std::vector<Task> load_tasks(std::istream& is, const std::string& name = "tasks") {
    std::vector<Task> tasks;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.starts_with("id,")) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 5) throw ParseError(name, lineno, "expected 5 fields");
        Task t;
        t.id = detail::parse_int(f[0], name, lineno);
        if (f[1] == "I")
            t.direction = Direction::Inbound;
        else if (f[1] == "O")
            t.direction = Direction::Outbound;
        else
            throw ParseError(name, lineno, "direction must be I or O, got '" + f[1] + "'");
        t.cell = {detail::parse_int(f[2], name, lineno), detail::parse_int(f[3], name, lineno),
                  detail::parse_int(f[4], name, lineno)};
        if (!position_in_bounds(t.cell)) throw ParseError(name, lineno, "cell out of bounds");
        tasks.push_back(t);
    }
    std::vector<int> ids;
    for (const Task& t : tasks) ids.push_back(t.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ParseError(name, 0, "duplicate task ids");
    return tasks;
}

/// Layout CSV: id,kind,row,layer,column with kind entrance or exit.
inline WarehouseLayout load_layout(std::istream& is, const std::string& name = "layout") {
    WarehouseLayout layout;
    layout.entrances.clear();
    layout.exits.clear();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.starts_with("id,")) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 5) throw ParseError(name, lineno, "expected 5 fields");
        Gate g{f[0], {detail::parse_int(f[2], name, lineno), detail::parse_int(f[3], name, lineno),
                      detail::parse_int(f[4], name, lineno)}};
        if (f[1] == "entrance")
            layout.entrances.push_back(std::move(g));
        else if (f[1] == "exit")
            layout.exits.push_back(std::move(g));
        else
            throw ParseError(name, lineno, "kind must be entrance or exit, got '" + f[1] + "'");
    }
    layout.validate();
    return layout;
}

inline std::vector<Task> load_tasks_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open task file: " + path);
    return load_tasks(is, path);
}

inline WarehouseLayout load_layout_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open layout file: " + path);
    return load_layout(is, path);
}

}  // namespace abc::etv
