#include "ionforge/cli.hpp"
#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"
#include "ionforge/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ionforge;

namespace {

py::dict field_dict(const DerivedDesign& d)
{
    py::dict out;
    for (const auto& f : field_table(d))
        out[py::str(f.key)] = f.value;
    return out;
}

py::list constraint_list(const explorer::ConstraintReport& r)
{
    py::list out;
    for (const auto& e : r.entries) {
        py::dict row;
        row["name"] = e.name;
        row["relation"] = e.relation;
        row["bound"] = e.bound;
        row["actual"] = e.actual;
        row["pass"] = e.pass;
        out.append(row);
    }
    return out;
}

explorer::SweepAxis axis_from_tuple(const py::tuple& t)
{
    if (t.size() < 4 || t.size() > 5)
        throw ValidationError("axis must be (name, min, max, steps[, 'linear'|'log'])");
    explorer::SweepAxis a{t[0].cast<std::string>(), t[1].cast<double>(), t[2].cast<double>(), t[3].cast<int>()};
    if (t.size() == 5) {
        const auto scale = t[4].cast<std::string>();
        if (scale != "log" && scale != "linear")
            throw ValidationError("axis scale must be 'linear' or 'log'", a.name);
        a.scale = scale == "log" ? explorer::Scale::Log : explorer::Scale::Linear;
    }
    return a;
}

std::vector<explorer::FieldConstraint> constraints_from(const std::vector<py::tuple>& items)
{
    std::vector<explorer::FieldConstraint> out;
    for (const auto& t : items) {
        if (t.size() != 3)
            throw ValidationError("constraint must be (field, relation, bound)");
        out.push_back({t[0].cast<std::string>(), t[1].cast<std::string>(), t[2].cast<double>()});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Trapped-ion quantum computer resource estimation engine.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    m.def("constants", [] {
        const auto k = constants();
        py::dict d;
        d["planck_h"] = k.planck_h;
        d["hbar"] = k.hbar;
        d["speed_of_light"] = k.speed_of_light;
        d["elementary_charge"] = k.elementary_charge;
        d["atomic_mass_unit"] = k.atomic_mass_unit;
        d["vacuum_permittivity"] = k.vacuum_permittivity;
        return d;
    });

    py::class_<IonSpecies>(m, "IonSpecies")
        .def(py::init([](std::string name, double linewidth, double wavelength, double mass_number,
                         double fine_structure) {
                 return load_species(IonSpecies{std::move(name), linewidth, wavelength, mass_number, fine_structure,
                                                DataProvenance::User});
             }),
             py::arg("name"), py::arg("linewidth"), py::arg("wavelength"), py::arg("mass_number"),
             py::arg("fine_structure"))
        .def_readonly("name", &IonSpecies::name)
        .def_readonly("linewidth", &IonSpecies::linewidth)
        .def_readonly("wavelength", &IonSpecies::wavelength)
        .def_readonly("mass_number", &IonSpecies::mass_number)
        .def_readonly("fine_structure", &IonSpecies::fine_structure)
        .def_property_readonly("provenance", [](const IonSpecies& s) { return std::string(to_string(s.data_provenance)); })
        .def_property_readonly("mass", &IonSpecies::mass)
        .def("__repr__", [](const IonSpecies& s) { return "<IonSpecies " + s.name + ">"; });

    m.def("load_species", py::overload_cast<std::string_view>(&load_species), py::arg("name"));

    // optics
    m.def("saturation_intensity", &optics::saturation_intensity);
    m.def("recoil_frequency", &optics::recoil_frequency);
    m.def("measurement_error", &optics::measurement_error, py::arg("mean_counts"), py::arg("threshold") = 2);
    m.def("measurement_time", &optics::measurement_time);
    m.def("scattering_floor", &optics::scattering_floor);
    m.def(
        "derive_raman",
        [](const IonSpecies& s, double tau_p, double epsilon_s, double beam_radius, long long n_parallel) {
            const auto r = optics::derive_raman(s, {tau_p, epsilon_s, beam_radius, n_parallel});
            py::dict d;
            d["stretch_frequency"] = r.stretch_frequency;
            d["com_frequency"] = r.com_frequency;
            d["lamb_dicke"] = r.lamb_dicke;
            d["rabi_frequency"] = r.rabi_frequency;
            d["saturation_intensity"] = r.saturation_intensity;
            d["recoil_frequency"] = r.recoil_frequency;
            d["scattering_floor"] = r.scattering_floor;
            d["intensity_at_floor"] = r.intensity_at_floor;
            d["intensity"] = r.intensity;
            d["beam_power"] = r.beam_power;
            d["total_power"] = r.total_power;
            return d;
        },
        py::arg("species"), py::arg("tau_p"), py::arg("epsilon_s"), py::arg("beam_radius"), py::arg("n_parallel"));

    // trapchip
    m.def("split_frequency", &trapchip::split_frequency);
    m.def("radial_chain", [](double a, double q, double mu4, double e_rf, double rho) {
        const auto r = trapchip::radial_chain(a, q, mu4, e_rf, rho);
        return py::make_tuple(r.secular_frequency, r.rf_drive, r.v_rms);
    });
    m.def("heating_rate", &trapchip::heating_rate);
    m.def("thermal_gate_error", &trapchip::thermal_gate_error);
    m.def("cooling_time", &trapchip::cooling_time);

    // budget
    m.def("physical_gate_time", &budget::physical_gate_time);
    m.def("logical_gate_rate", &budget::logical_gate_rate);
    m.def("crash_probability", [](double g) { return budget::crash_probability(g); });
    m.def("logical_capacity", &budget::logical_capacity);

    // design pipeline
    py::class_<DesignFile>(m, "DesignFile")
        .def("set", [](DesignFile& f, const std::string& key, double v) { set_parameter(f.config, key, v); })
        .def("get", [](const DesignFile& f, const std::string& key) { return get_parameter(f.config, key); })
        .def("override", [](DesignFile& f, const std::string& a) { apply_override(f.config, a); })
        .def("set_species", [](DesignFile& f, const std::string& n) { set_species(f.config, n); })
        .def("serialize", [](const DesignFile& f) { return serialize_design(f); })
        .def("__eq__", [](const DesignFile& a, const DesignFile& b) { return a == b; });
    m.def("default_design", [] { return DesignFile{}; });
    m.def("parse_design", &parse_design);
    m.def("load_design", [](const std::string& p) { return load_design(p); });

    py::class_<DerivedDesign>(m, "DerivedDesign")
        .def("fields", &field_dict)
        .def("__getitem__", [](const DerivedDesign& d, const std::string& k) { return field_value(d, k); })
        .def_readonly("raman_feasible", &DerivedDesign::raman_feasible);
    m.def("derive", [](const DesignFile& f) { return derive(f.config); });
    m.def("check_constraints", [](const DerivedDesign& d) { return constraint_list(explorer::check_constraints(d)); });
    m.def("render_report", [](const DerivedDesign& d, const std::string& format) {
        return report::render_report(report::build_report(d, explorer::check_constraints(d)),
                                     report::format_from_string(format));
    }, py::arg("design"), py::arg("format") = "human");

    // explorer
    m.def("solve_rho_heating_bound", &explorer::solve_rho_heating_bound, py::arg("species"),
          py::arg("octopole_factor"), py::arg("max_dc_field"), py::arg("noise_coefficient"));
    m.def(
        "sweep",
        [](const DesignFile& f, const std::vector<py::tuple>& axes, const std::string& objective,
           const std::vector<py::tuple>& constraints) {
            explorer::SweepSpec spec;
            for (const auto& t : axes)
                spec.axes.push_back(axis_from_tuple(t));
            spec.objective = objective;
            spec.constraints = constraints_from(constraints);
            const auto res = explorer::sweep(f.config, spec);
            py::list out;
            for (const auto& p : res.points) {
                py::dict d;
                d["coordinates"] = p.coordinates;
                d["feasible"] = p.feasible;
                d["objective"] = p.objective;
                out.append(d);
            }
            return out;
        },
        py::arg("design"), py::arg("axes"), py::arg("objective") = "",
        py::arg("constraints") = std::vector<py::tuple>{});
    m.def(
        "optimize",
        [](const DesignFile& f, const std::vector<py::tuple>& params, const std::string& objective,
           const std::string& goal, const std::vector<py::tuple>& constraints) {
            explorer::OptimizeSpec spec;
            for (const auto& t : params)
                spec.parameters.push_back(axis_from_tuple(t));
            spec.objective = objective;
            if (goal != "minimize" && goal != "maximize")
                throw ValidationError("goal must be 'minimize' or 'maximize'", "goal");
            spec.goal = goal == "maximize" ? explorer::Goal::Maximize : explorer::Goal::Minimize;
            spec.constraints = constraints_from(constraints);
            const auto r = explorer::optimize(f.config, spec);
            py::dict d;
            d["found"] = r.found;
            d["parameters"] = r.parameters;
            d["objective"] = r.objective;
            d["evaluations"] = r.evaluations;
            return d;
        },
        py::arg("design"), py::arg("parameters"), py::arg("objective"), py::arg("goal") = "minimize",
        py::arg("constraints") = std::vector<py::tuple>{});
    m.def("pipelined_logical_rate", [](const DerivedDesign& d, double s) {
        return explorer::scenario_ancilla_pipelining(d, s).logical.logical_rate;
    });
    m.def("redundant_measurement_time", [](const DerivedDesign& d, int k) {
        return explorer::scenario_measurement_redundancy(d, k).measurement_time;
    });
    m.def("noise_scaling_rule", &explorer::noise_scaling_rule);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
