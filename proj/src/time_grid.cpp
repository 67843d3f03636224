#include "qmsd/time_grid.hpp"

#include <charconv>
#include <cmath>

#include "qmsd/errors.hpp"

namespace qmsd {

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || times_[i] < 0.0) {
            throw ValidationError("grid", "times must be finite and non-negative");
        }
        if (i > 0 && !(times_[i] > times_[i - 1])) {
            throw ValidationError("grid", "times must be strictly increasing");
        }
    }
}

TimeGrid TimeGrid::linear(double start, double stop, std::size_t count) {
    if (count == 0) throw ValidationError("grid", "count must be positive");
    if (count == 1) return TimeGrid({start});
    std::vector<double> t(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) t[i] = start + step * static_cast<double>(i);
    t.back() = stop;
    return TimeGrid(std::move(t));
}

TimeGrid TimeGrid::geometric(double start, double stop, std::size_t count) {
    if (count == 0) throw ValidationError("grid", "count must be positive");
    if (!(start > 0.0)) throw ValidationError("grid", "geometric grid needs start > 0");
    if (count == 1) return TimeGrid({start});
    std::vector<double> t(count);
    const double ratio = std::log(stop / start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) t[i] = start * std::exp(ratio * static_cast<double>(i));
    t.front() = start;
    t.back() = stop;
    return TimeGrid(std::move(t));
}

namespace {

double parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError("grid", "cannot parse number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    if (parts.size() != 4) {
        throw ValidationError("grid", "expected <linear|geometric>:<start>:<stop>:<count>");
    }
    GridSpec spec;
    if (parts[0] == "linear") {
        spec.kind = Kind::Linear;
    } else if (parts[0] == "geometric") {
        spec.kind = Kind::Geometric;
    } else {
        throw ValidationError("grid", "unknown grid kind '" + std::string(parts[0]) + "'");
    }
    spec.start = parse_double(parts[1]);
    spec.stop = parse_double(parts[2]);
    const double count = parse_double(parts[3]);
    if (!(count >= 1.0) || count != std::floor(count)) {
        throw ValidationError("grid", "count must be a positive integer");
    }
    spec.count = static_cast<std::size_t>(count);
    spec.validate();
    return spec;
}

std::string GridSpec::to_string() const {
    auto shortest = [](double v) {
        char buf[32];
        const auto r = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, r.ptr);
    };
    return std::string(kind == Kind::Linear ? "linear" : "geometric") + ':' + shortest(start) + ':' +
           shortest(stop) + ':' + std::to_string(count);
}

void GridSpec::validate() const {
    if (count == 0) throw ValidationError("grid", "count must be positive");
    if (!std::isfinite(start) || !std::isfinite(stop) || start < 0.0) {
        throw ValidationError("grid", "start/stop must be finite and start >= 0");
    }
    if (count > 1 && !(stop > start)) throw ValidationError("grid", "stop must exceed start");
    if (kind == Kind::Geometric && !(start > 0.0)) {
        throw ValidationError("grid", "geometric grid needs start > 0");
    }
}

TimeGrid GridSpec::materialize(double t_b) const {
    validate();
    return kind == Kind::Linear ? TimeGrid::linear(start * t_b, stop * t_b, count)
                                : TimeGrid::geometric(start * t_b, stop * t_b, count);
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::IdealAnalytic: return "ideal-analytic";
        case Method::ExactSum: return "exact-sum";
        case Method::BreveSum: return "breve-sum";
        case Method::BreveClosed: return "breve-closed";
        case Method::CollisionModel: return "collision-model";
        case Method::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

}  // namespace qmsd
