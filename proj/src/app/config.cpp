#include "qmsd/app/config.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "qmsd/errors.hpp"
#include "qmsd/units.hpp"

namespace qmsd::app {

namespace {

constexpr std::array<Preset, 2> kPresets{{
    {"co-cu100", 28.0, 190.0, 256.0},
    {"xe-pt111", 131.0, 105.0, 277.0},
}};

}  // namespace

std::vector<OutputFormat> parse_formats(std::string_view list) {
    std::vector<OutputFormat> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const auto item = list.substr(pos, comma == std::string_view::npos ? list.size() - pos
                                                                          : comma - pos);
        OutputFormat f;
        if (item == "csv") {
            f = OutputFormat::Csv;
        } else if (item == "svg") {
            f = OutputFormat::Svg;
        } else if (item == "json-meta") {
            f = OutputFormat::JsonMeta;
        } else {
            throw ValidationError("formats", "unknown format '" + std::string(item) + "'");
        }
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Svg: return "svg";
        case OutputFormat::JsonMeta: return "json-meta";
    }
    return "unknown";
}

const Preset& find_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return p;
    }
    throw ValidationError("preset", "unknown preset '" + std::string(name) + "'");
}

void RunConfig::validate() const {
    system().validate();
    if (funcs_per_cell < 1) throw ValidationError("funcs-per-cell", "must be at least 1");
    if (!(alpha > 0.0)) throw ValidationError("alpha", "must be positive");
    if (members < 2) throw ValidationError("members", "must be at least 2");
    if (mc_n_cells < 1) throw ValidationError("mc-n-cells", "must be at least 1");
    if (block_rows == 0) throw ValidationError("block-rows", "must be positive");
    if (grid) grid->validate();
    if (figure_cells.empty()) throw ValidationError("figure-cells", "must not be empty");
    for (int c : figure_cells) {
        if (c < 1) throw ValidationError("figure-cells", "entries must be at least 1");
    }
    if (q_inv_angstrom.empty()) throw ValidationError("q", "must not be empty");
    for (double q : q_inv_angstrom) {
        if (!(q > 0.0)) throw ValidationError("q", "entries must be positive");
    }
    if (out_dir.empty()) throw ValidationError("out", "must not be empty");
}

PhysicalSystem RunConfig::system_with_cells(int cells) const {
    return PhysicalSystem{units::u_to_kg(mass_u), temperature_K, units::pm_to_m(lattice_pm),
                          cells, dimensionality};
}

bool RunConfig::wants(OutputFormat f) const {
    return std::find(formats.begin(), formats.end(), f) != formats.end();
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["mass_u"] = mass_u;
    j["temperature_K"] = temperature_K;
    j["lattice_pm"] = lattice_pm;
    j["n_cells"] = n_cells;
    j["dimensionality"] = dimensionality;
    j["funcs_per_cell"] = funcs_per_cell;
    j["alpha"] = alpha;
    j["members"] = members;
    j["seed"] = seed;
    j["mc_n_cells"] = mc_n_cells;
    j["block_rows"] = block_rows;
    j["grid"] = grid ? nlohmann::json(grid->to_string()) : nlohmann::json(nullptr);
    j["figure_cells"] = figure_cells;
    j["q_inv_angstrom"] = q_inv_angstrom;
    return j;
}

std::string RunConfig::hash_hex() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json().dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qmsd::app
