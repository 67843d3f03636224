#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmsd {

/// Strictly increasing, non-negative sample times in seconds.
class TimeGrid {
public:
    TimeGrid() = default;
    /// Validates ordering and sign; throws ValidationError("grid", ...).
    explicit TimeGrid(std::vector<double> times);

    static TimeGrid linear(double start, double stop, std::size_t count);
    static TimeGrid geometric(double start, double stop, std::size_t count);

    const std::vector<double>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }
    double operator[](std::size_t i) const { return times_[i]; }

private:
    std::vector<double> times_;
};

/// Grid description in units of the thermal time t_b, e.g. "linear:0:30:301".
struct GridSpec {
    enum class Kind { Linear, Geometric };

    Kind kind = Kind::Linear;
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 2;

    static GridSpec parse(std::string_view text);
    std::string to_string() const;
    void validate() const;
    TimeGrid materialize(double t_b) const;
};

enum class Method { IdealAnalytic, ExactSum, BreveSum, BreveClosed, CollisionModel, MonteCarlo };

std::string_view to_string(Method method);

struct MsdCurve {
    std::vector<double> times;   // s
    std::vector<double> values;  // m^2
    Method method = Method::IdealAnalytic;
    std::map<std::string, std::string> params;
};

}  // namespace qmsd
