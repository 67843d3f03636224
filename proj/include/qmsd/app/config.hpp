#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmsd/system.hpp"
#include "qmsd/time_grid.hpp"

namespace qmsd::app {

/// Output could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Svg, JsonMeta };

std::vector<OutputFormat> parse_formats(std::string_view list);
std::string_view to_string(OutputFormat f);

/// Named parameter sets for the two physical systems discussed: CO on a flat
/// Cu(100) surface and Xe on Pt(111).
struct Preset {
    std::string_view name;
    double mass_u;
    double temperature_K;
    double lattice_pm;
};

const Preset& find_preset(std::string_view name);

/// Everything a subcommand needs. User units at this level; conversion to SI
/// happens once in system().
struct RunConfig {
    double mass_u = 28.0;
    double temperature_K = 190.0;
    double lattice_pm = 256.0;
    int n_cells = 10;
    int dimensionality = 1;
    int funcs_per_cell = 100;
    double alpha = 0.35;
    std::size_t members = 10000;
    std::uint64_t seed = 42;
    int mc_n_cells = 2;
    std::size_t block_rows = 64;
    std::optional<GridSpec> grid;  // unset: per-command default
    std::vector<int> figure_cells{10, 20, 40};
    std::vector<double> q_inv_angstrom{1.0};

    std::string out_dir = "qmsd-out";
    std::vector<OutputFormat> formats{OutputFormat::Csv, OutputFormat::Svg, OutputFormat::JsonMeta};
    bool timestamp = true;

    /// Throws ValidationError for the first bad field.
    void validate() const;

    PhysicalSystem system() const { return system_with_cells(n_cells); }
    PhysicalSystem system_with_cells(int cells) const;

    GridSpec grid_or(const GridSpec& fallback) const { return grid.value_or(fallback); }
    bool wants(OutputFormat f) const;

    /// Every parameter that influences numerical results. Output location,
    /// formats and the timestamp switch are excluded.
    nlohmann::json to_json() const;

    /// FNV-1a 64 of to_json().dump(), as 16 hex digits.
    std::string hash_hex() const;
};

}  // namespace qmsd::app
