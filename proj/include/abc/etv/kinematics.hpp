#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace abc::etv {

// Container area geometry: two facing shelf rows, 8 layers, 60 columns.
inline constexpr int kRows = 2;
inline constexpr int kLayers = 8;
inline constexpr int kColumns = 60;

/// Trapezoidal motion parameters of the elevating transfer vehicle plus cell
/// geometry and the per-handling (load/unload) time.
struct KinematicParams {
    double accel_x = 0.0;       // m/s^2, horizontal
    double accel_y = 0.0;       // m/s^2, vertical
    double vmax_x = 0.0;        // m/s
    double vmax_y = 0.0;        // m/s
    double cell_width = 1.0;    // m
    double cell_height = 1.0;   // m
    double handling_time = 2.0; // s, one load or unload

    /// Defaults fitted to the reference per-cell travel-time table for 1 m
    /// cells. Fit constants (seconds): w/a_x = 7.489, w/V_x = 1.8764,
    /// h/V_y = 11.25, V_y/a_y = 0.37. The fit oracle lives in the test suite.
    static KinematicParams calibrated() {
        KinematicParams p;
        p.cell_width = 1.0;
        p.cell_height = 1.0;
        p.accel_x = p.cell_width / 7.489;
        p.vmax_x = p.cell_width / 1.8764;
        p.vmax_y = p.cell_height / 11.25;
        p.accel_y = p.vmax_y / 0.37;
        p.handling_time = 2.0;
        return p;
    }

    void validate() const {
        const double fields[] = {accel_x, accel_y, vmax_x,     vmax_y,
                                 cell_width, cell_height, handling_time};
        for (const double f : fields)
            if (!(f > 0.0)) throw std::invalid_argument("KinematicParams: all fields must be > 0");
    }
};

/// Storage slot (or gate) coordinate. 1-based, row in {1,2}, layer in [1,8],
/// column in [1,60].
struct Position {
    int row = 1;
    int layer = 1;
    int column = 1;

    bool operator==(const Position&) const = default;
};

inline bool position_in_bounds(const Position& p) {
    return p.row >= 1 && p.row <= kRows && p.layer >= 1 && p.layer <= kLayers && p.column >= 1 &&
           p.column <= kColumns;
}

/// Time to accelerate to vmax and immediately brake back to rest: 2 vmax / a.
inline double peak_time(double accel, double vmax) {
    if (!(accel > 0.0) || !(vmax > 0.0))
        throw std::invalid_argument("peak_time: accel and vmax must be > 0");
    return 2.0 * vmax / accel;
}

/// Distance covered by that triangular profile: a * peak_time^2 / 4.
inline double critical_distance(double accel, double vmax) {
    const double t = peak_time(accel, vmax);
    return 0.25 * accel * t * t;
}

/// Travel time along one axis for `cells` whole cells. Short moves never
/// reach vmax (pure accelerate/brake); longer ones add a constant-speed leg.
inline double axis_time(long cells, double cell_size, double accel, double vmax) {
    if (cells < 0) throw std::invalid_argument("axis_time: cells must be >= 0");
    if (!(cell_size > 0.0) || !(accel > 0.0) || !(vmax > 0.0))
        throw std::invalid_argument("axis_time: kinematic parameters must be > 0");
    const double distance = static_cast<double>(cells) * cell_size;
    const double dcrit = critical_distance(accel, vmax);
    if (distance <= dcrit) return 2.0 * std::sqrt(distance / accel);
    return peak_time(accel, vmax) + (distance - dcrit) / vmax;
}

/// Point-to-point travel time: the slower of the horizontal and vertical
/// axes. The two shelf rows face one aisle, so a row change costs nothing.
inline double travel_time(const Position& from, const Position& to, const KinematicParams& params) {
    if (!position_in_bounds(from) || !position_in_bounds(to))
        throw std::domain_error("travel_time: position outside the warehouse");
    const long dcol = std::labs(static_cast<long>(to.column) - from.column);
    const long dlay = std::labs(static_cast<long>(to.layer) - from.layer);
    return std::max(axis_time(dcol, params.cell_width, params.accel_x, params.vmax_x),
                    axis_time(dlay, params.cell_height, params.accel_y, params.vmax_y));
}

/// Precomputed travel times indexed by (layer_diff, column_diff). Immutable
/// after construction; safe to share across threads.
class TimeMatrix {
public:
    TimeMatrix(std::size_t layers, std::size_t columns)
        : layers_(layers), columns_(columns), entries_(layers * columns, 0.0) {}

    std::size_t layer_diffs() const { return layers_; }
    std::size_t column_diffs() const { return columns_; }

    double at(std::size_t layer_diff, std::size_t column_diff) const {
        if (layer_diff >= layers_ || column_diff >= columns_)
            throw std::out_of_range("TimeMatrix: displacement out of range");
        return entries_[layer_diff * columns_ + column_diff];
    }

    /// Lookup by positions; row difference is ignored.
    double between(const Position& a, const Position& b) const {
        return at(static_cast<std::size_t>(std::abs(a.layer - b.layer)),
                  static_cast<std::size_t>(std::abs(a.column - b.column)));
    }

    void write_csv(std::ostream& os) const {
        os << "layer_diff";
        for (std::size_t u = 0; u < columns_; ++u) os << ',' << u;
        os << '\n';
        char buf[32];
        for (std::size_t e = 0; e < layers_; ++e) {
            os << e;
            for (std::size_t u = 0; u < columns_; ++u) {
                std::snprintf(buf, sizeof buf, "%.4f", at(e, u));
                os << ',' << buf;
            }
            os << '\n';
        }
    }

    friend TimeMatrix build_time_matrix(const KinematicParams&, std::size_t, std::size_t);

private:
    std::size_t layers_;
    std::size_t columns_;
    std::vector<double> entries_;
};

inline TimeMatrix build_time_matrix(const KinematicParams& params, std::size_t layers = kLayers,
                                    std::size_t columns = kColumns) {
    params.validate();
    TimeMatrix m(layers, columns);
    for (std::size_t e = 0; e < layers; ++e)
        for (std::size_t u = 0; u < columns; ++u)
            m.entries_[e * columns + u] =
                std::max(axis_time(static_cast<long>(u), params.cell_width, params.accel_x, params.vmax_x),
                         axis_time(static_cast<long>(e), params.cell_height, params.accel_y, params.vmax_y));
    return m;
}

/// Cost of one task: both travel legs plus a pickup and a release.
inline double task_time(double leg0, double leg1, const KinematicParams& params) {
    if (leg0 < 0.0 || leg1 < 0.0) throw std::domain_error("task_time: legs must be >= 0");
    return leg0 + leg1 + 2.0 * params.handling_time;
}

/// Total schedule cost; the empty schedule costs zero.
inline double schedule_time(std::span<const double> task_times) {
    double total = 0.0;
    for (const double t : task_times) {
        if (t < 0.0) throw std::domain_error("schedule_time: task times must be >= 0");
        total += t;
    }
    return total;
}

}  // namespace abc::etv
