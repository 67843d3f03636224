#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "qmsd/qmsd.hpp"

namespace py = pybind11;
using namespace qmsd;

namespace {

template <class F>
std::vector<double> map_times(const std::vector<double>& times, F&& f) {
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(f(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Thermal MSD of a free particle on a periodic super-cell";

    py::class_<PhysicalSystem>(m, "PhysicalSystem")
        .def(py::init<>())
        .def_static("from_user_units", &PhysicalSystem::from_user_units, py::arg("mass_u"),
                    py::arg("temperature_K"), py::arg("lattice_pm"), py::arg("n_cells"),
                    py::arg("dimensionality") = 1)
        .def_readwrite("mass", &PhysicalSystem::mass)
        .def_readwrite("temperature", &PhysicalSystem::temperature)
        .def_readwrite("lattice_a", &PhysicalSystem::lattice_a)
        .def_readwrite("n_cells", &PhysicalSystem::n_cells)
        .def_readwrite("dimensionality", &PhysicalSystem::dimensionality)
        .def("length", &PhysicalSystem::length)
        .def("validate", &PhysicalSystem::validate);

    py::class_<CharacteristicScales>(m, "Scales")
        .def_readonly("beta", &CharacteristicScales::beta)
        .def_readonly("t_b", &CharacteristicScales::t_b)
        .def_readonly("t_c", &CharacteristicScales::t_c)
        .def_readonly("v_T", &CharacteristicScales::v_T)
        .def_readonly("lambda_T", &CharacteristicScales::lambda_T)
        .def_readonly("D_q", &CharacteristicScales::D_q)
        .def_readonly("Q_approx", &CharacteristicScales::Q_approx);
    m.def("derive_scales", &derive_scales, py::arg("system"));

    py::class_<EigenBasis>(m, "EigenBasis")
        .def_property_readonly("size", &EigenBasis::size)
        .def_property_readonly("max_index", &EigenBasis::max_index)
        .def_property_readonly("length", &EigenBasis::length)
        .def_property_readonly("wavenumbers", &EigenBasis::wavenumbers)
        .def_property_readonly("energies", &EigenBasis::energies)
        .def_property_readonly("weights", &EigenBasis::weights)
        .def_property_readonly("edge_weight", &EigenBasis::edge_weight)
        .def_property_readonly("warnings", &EigenBasis::warnings);
    m.def("build_basis", &build_basis, py::arg("system"), py::arg("funcs_per_cell") = 100,
          py::arg("edge_weight_cutoff") = kDefaultEdgeWeightCutoff);
    m.def("partition_function", &partition_function, py::arg("basis"));

    py::class_<IdealMsdParams>(m, "IdealMsdParams")
        .def_static("from_system", &IdealMsdParams::from, py::arg("system"), py::arg("scales"))
        .def_readwrite("mass", &IdealMsdParams::mass)
        .def_readwrite("t_b", &IdealMsdParams::t_b);
    m.def(
        "msd_ideal",
        [](const IdealMsdParams& p, const std::vector<double>& times) {
            p.validate();
            return map_times(times, [&](double t) { return msd_ideal(p, t); });
        },
        py::arg("params"), py::arg("times"));

    m.def(
        "msd_exact",
        [](const EigenBasis& basis, double Q, const std::vector<double>& times) {
            py::gil_scoped_release release;
            return msd_exact_curve(basis, Q, TimeGrid(times)).values;
        },
        py::arg("basis"), py::arg("Q"), py::arg("times"));
    m.def(
        "breve_sum", [](const EigenBasis& basis, double Q) { return breve_sum(basis, Q); },
        py::arg("basis"), py::arg("Q"));
    m.def("breve_closed", &breve_closed, py::arg("system"), py::arg("scales"));
    m.def("J", &J, py::arg("y"));
    m.def("I_ab", &I_ab, py::arg("a"), py::arg("b"));

    py::class_<CollisionModelParams>(m, "CollisionModelParams")
        .def_static("from_system", &CollisionModelParams::from, py::arg("alpha"), py::arg("system"),
                    py::arg("scales"))
        .def_readwrite("alpha", &CollisionModelParams::alpha)
        .def_readwrite("L", &CollisionModelParams::L)
        .def_readwrite("v_T", &CollisionModelParams::v_T)
        .def_readwrite("t_b", &CollisionModelParams::t_b);
    m.def(
        "msd_collision_model",
        [](const CollisionModelParams& p, const std::vector<double>& times) {
            return msd_collision_model_curve(p, TimeGrid(times)).values;
        },
        py::arg("params"), py::arg("times"));

    m.def(
        "sample_msd",
        [](const EigenBasis& basis, double Q, const std::vector<double>& times, std::size_t n_members,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            const auto r = sample_msd(basis, Q, TimeGrid(times), n_members, seed);
            return std::make_pair(r.mean_msd, r.std_error);
        },
        py::arg("basis"), py::arg("Q"), py::arg("times"), py::arg("n_members"), py::arg("seed") = 42,
        "Returns (mean_msd, std_error) lists.");

    py::class_<ScatteringParams>(m, "ScatteringParams")
        .def(py::init([](double v_T, double D_q, double q) { return ScatteringParams{v_T, D_q, q}; }),
             py::arg("v_T"), py::arg("D_q"), py::arg("q"))
        .def_readwrite("v_T", &ScatteringParams::v_T)
        .def_readwrite("D_q", &ScatteringParams::D_q)
        .def_readwrite("q", &ScatteringParams::q);
    m.def("pair_correlation_self", &pair_correlation_self, py::arg("params"), py::arg("x"), py::arg("t"));
    m.def("dsf", &dsf, py::arg("params"), py::arg("omega"));
    m.def("isf", &isf, py::arg("params"), py::arg("t"));
    m.def("isf_phase", &isf_phase, py::arg("params"), py::arg("t"));
}
