#include "qmsd/app/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "qmsd/app/config.hpp"
#include "qmsd/errors.hpp"

namespace qmsd::app {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

void CsvTable::add_row(std::vector<double> row) {
    if (!columns.empty() && row.size() != columns.size()) {
        throw ValidationError("row", "has " + std::to_string(row.size()) + " cells, expected " +
                                         std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string CsvTable::render() const {
    std::string out;
    for (const auto& c : comments) out += "# " + c + '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v, int precision = 4) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

struct Axis {
    bool log = false;
    double lo = 0.0;
    double hi = 1.0;
    double pixel_lo = 0.0;
    double pixel_hi = 1.0;

    double map(double v) const {
        const double a = log ? std::log10(v) : v;
        const double b0 = log ? std::log10(lo) : lo;
        const double b1 = log ? std::log10(hi) : hi;
        return pixel_lo + (a - b0) / (b1 - b0) * (pixel_hi - pixel_lo);
    }

    bool accepts(double v) const { return std::isfinite(v) && (!log || v > 0.0); }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
                const double v = std::pow(10.0, e);
                if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
            }
            return out;
        }
        const double raw = (hi - lo) / 6.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        const double norm = raw / mag;
        const double step = (norm < 1.5 ? 1.0 : norm < 3.0 ? 2.0 : norm < 7.0 ? 5.0 : 10.0) * mag;
        for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) {
            out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
        }
        return out;
    }
};

Axis make_axis(bool log, const std::vector<const std::vector<double>*>& data, double p0,
               double p1) {
    Axis ax;
    ax.log = log;
    ax.pixel_lo = p0;
    ax.pixel_hi = p1;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto* d : data) {
        for (double v : *d) {
            if (!ax.accepts(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!std::isfinite(lo)) {
        lo = log ? 1.0 : 0.0;
        hi = log ? 10.0 : 1.0;
    }
    if (hi <= lo) hi = log ? lo * 10.0 : lo + 1.0;
    if (!log) {
        const double pad = 0.02 * (hi - lo);
        hi += pad;
        if (lo != 0.0) lo -= pad;
    }
    ax.lo = lo;
    ax.hi = hi;
    return ax;
}

}  // namespace

std::string Plot::render(const std::optional<std::string>& timestamp) const {
    std::vector<const std::vector<double>*> xs, ys;
    for (const auto& s : series) {
        xs.push_back(&s.x);
        ys.push_back(&s.y);
    }
    std::vector<double> marker_x;
    for (const auto& m : markers) marker_x.push_back(m.x);
    xs.push_back(&marker_x);

    const Axis ax = make_axis(log_x, xs, kLeft, kWidth - kRight);
    const Axis ay = make_axis(log_y, ys, kHeight - kBottom, kTop);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    for (const auto& c : comments) os << "<!-- " << escape(c) << " -->\n";
    if (timestamp) os << "<!-- generated " << escape(*timestamp) << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"16\">"
       << escape(title) << "</text>\n";

    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\""
       << y0 - y1 << "\" fill=\"none\" stroke=\"black\"/>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double t : ax.ticks()) {
        const double px = ax.map(t);
        os << "<line x1=\"" << fmt(px, 6) << "\" y1=\"" << y0 << "\" x2=\"" << fmt(px, 6)
           << "\" y2=\"" << y0 + 5 << "\" stroke=\"black\"/>";
        os << "<text x=\"" << fmt(px, 6) << "\" y=\"" << y0 + 18
           << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    for (double t : ay.ticks()) {
        const double py = ay.map(t);
        os << "<line x1=\"" << x0 - 5 << "\" y1=\"" << fmt(py, 6) << "\" x2=\"" << x0
           << "\" y2=\"" << fmt(py, 6) << "\" stroke=\"black\"/>";
        os << "<text x=\"" << x0 - 8 << "\" y=\"" << fmt(py + 4, 6)
           << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }
    os << "</g>\n";
    os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 25
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << escape(x_label) << "</text>\n";
    os << "<text transform=\"translate(22," << (y0 + y1) / 2
       << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << escape(y_label) << "</text>\n";

    for (const auto& m : markers) {
        if (!ax.accepts(m.x)) continue;
        const double px = ax.map(m.x);
        os << "<line x1=\"" << fmt(px, 6) << "\" y1=\"" << y0 << "\" x2=\"" << fmt(px, 6)
           << "\" y2=\"" << y1 << "\" stroke=\"#888888\" stroke-dasharray=\"2,3\"/>";
        os << "<text x=\"" << fmt(px + 4, 6) << "\" y=\"" << y1 + 14
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">"
           << escape(m.label) << "</text>\n";
    }

    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
        os << " points=\"";
        const std::size_t n = std::min(s.x.size(), s.y.size());
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!ax.accepts(s.x[i]) || !ay.accepts(s.y[i])) continue;
            if (!first) os << ' ';
            os << fmt(ax.map(s.x[i]), 7) << ',' << fmt(ay.map(s.y[i]), 7);
            first = false;
        }
        os << "\"/>\n";
    }

    double ly = y1 + 16;
    for (const auto& s : series) {
        os << "<line x1=\"" << x0 + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << x0 + 42
           << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color << "\" stroke-width=\"1.6\"";
        if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
        os << "/><text x=\"" << x0 + 48 << "\" y=\"" << ly
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
        ly += 16;
    }
    os << "</svg>\n";
    return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace qmsd::app
