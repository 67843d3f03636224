#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmsd::app {

/// Shortest round-trip-safe decimal with 17 significant digits, '.' separator.
std::string format_number(double value);

/// Numeric table rendered as '#'-prefixed comment lines, a header row naming
/// units, and newline-terminated data rows.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
    std::string render() const;
};

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#000000";
    std::string dash;  // SVG stroke-dasharray, empty for solid
};

struct Marker {
    double x = 0.0;
    std::string label;
};

/// Minimal line plot: axes with ticks, linear or log scales, legend.
struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
    std::vector<Marker> markers;
    std::vector<std::string> comments;

    /// `timestamp`, when set, is embedded as an XML comment.
    std::string render(const std::optional<std::string>& timestamp = std::nullopt) const;
};

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace qmsd::app
