#include "ionforge/design.hpp"

#include "ionforge/error.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

namespace ionforge {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Input: return "input";
    case Provenance::Formula: return "formula";
    case Provenance::AnchoredOverride: return "anchored-override";
    }
    return "formula";
}

Provenance provenance_from_string(std::string_view s)
{
    if (s == "input")
        return Provenance::Input;
    if (s == "formula")
        return Provenance::Formula;
    if (s == "anchored-override")
        return Provenance::AnchoredOverride;
    throw ValidationError("unknown provenance '" + std::string(s) + "'", "provenance");
}

namespace {

optics::ReadoutConfig readout_config(const DesignConfig& cfg)
{
    return optics::ReadoutConfig{
        .collection_efficiency = cfg.optics.collection_efficiency,
        .mean_counts = cfg.optics.mean_counts,
        .count_threshold = cfg.optics.count_threshold,
        .beam_radius = cfg.optics.beam_radius,
        .scatter_fraction = cfg.optics.readout_scatter_fraction,
    };
}

}  // namespace

void validate(const DesignConfig& cfg)
{
    validate(cfg.species);
    trapchip::validate(cfg.geometry);
    trapchip::validate(cfg.heating);
    optics::validate(readout_config(cfg));
    budget::validate(cfg.encoding);
    if (!(cfg.optics.mean_counts > 0.0))
        throw ValidationError("mean counts must be > 0 for a finite measurement time", "optics.mean_counts");
    optics::validate(optics::RamanConfig{cfg.optics.phase_gate_time, cfg.optics.scattering_target,
                                         cfg.optics.beam_radius, 1});
    const auto& o = cfg.overrides;
    if (o.split_frequency && !(*o.split_frequency > 0.0))
        throw ValidationError("split frequency override must be > 0", "overrides.split_frequency");
    if (o.gate_heating_rate && !(*o.gate_heating_rate >= 0.0))
        throw ValidationError("gate heating rate override must be >= 0", "overrides.gate_heating_rate");
    if (!(o.crash.anchor_gamma2 > 0.0))
        throw ValidationError("crash anchor gamma2 must be > 0", "overrides.crash_anchor_gamma2");
    if (!(o.crash.anchor_probability > 0.0 && o.crash.anchor_probability <= 1.0))
        throw ValidationError("crash anchor probability must lie in (0, 1]", "overrides.crash_anchor_probability");
}

DerivedDesign derive(const DesignConfig& cfg)
{
    validate(cfg);
    const IonSpecies& sp = cfg.species;
    const auto& g = cfg.geometry;

    DerivedDesign d{};
    d.config = cfg;

    const budget::EncodingDerived enc = budget::encoding_derived(cfg.encoding);
    d.physical_qubit_ions = budget::physical_qubit_ions(cfg.encoding.n_pbits);

    d.readout = optics::readout_budget(sp, readout_config(cfg));
    d.raman = optics::derive_raman_unchecked(
        sp, optics::RamanConfig{cfg.optics.phase_gate_time, cfg.optics.scattering_target, cfg.optics.beam_radius,
                                enc.n_parallel});
    d.raman_feasible = std::isfinite(d.raman.intensity);
    d.min_scattering_infidelity = optics::minimum_scattering_infidelity(d.raman.lamb_dicke, d.raman.scattering_floor);

    auto& t = d.trap;
    t.split_frequency_formula =
        trapchip::split_frequency(sp.mass_number, g.octopole_factor, g.max_dc_field, g.ion_electrode_distance);
    t.split_frequency_explicit = cfg.overrides.split_frequency.has_value();
    t.split_frequency_anchored = cfg.overrides.split_frequency.value_or(t.split_frequency_formula *
                                                                       trapchip::split_frequency_anchor_ratio());
    t.split_frequency_used =
        cfg.overrides.use_anchored_split_frequency ? t.split_frequency_anchored : t.split_frequency_formula;
    t.radial = trapchip::radial_chain(sp.mass_number, g.mathieu_q, g.quadrupole_factor, g.rf_field,
                                      g.ion_electrode_distance);
    t.electrical = trapchip::electrical_architecture(cfg.encoding.n_pbits, enc.n_parallel,
                                                     g.ion_electrode_distance, g.loss_tangent, t.radial.v_rms,
                                                     t.radial.rf_drive);
    t.rf_power_anchored = t.electrical.rf_power * trapchip::rf_power_anchor_ratio();

    auto& th = d.thermal;
    const double nbar = cfg.heating.mean_vibration_target;
    th.thermal_gate_error = trapchip::thermal_gate_error(d.raman.lamb_dicke, nbar);
    th.cooling_time = trapchip::cooling_time(nbar, d.raman.com_frequency);
    th.gate_heating_rate_formula = trapchip::heating_rate(g.ion_electrode_distance * g.gate_zone_factor,
                                                          cfg.heating.noise_coefficient, d.raman.stretch_frequency,
                                                          sp.mass());
    th.gate_heating_rate_override = cfg.overrides.gate_heating_rate.has_value();
    th.gate_heating_rate_used = cfg.overrides.gate_heating_rate.value_or(th.gate_heating_rate_formula);
    th.gate_heating = trapchip::heating_during(cfg.optics.phase_gate_time, th.gate_heating_rate_used);
    th.split_heating_rate = trapchip::heating_rate(g.ion_electrode_distance, cfg.heating.noise_coefficient,
                                                   t.split_frequency_formula, sp.mass());
    th.split_heating = trapchip::heating_during(2.0 / t.split_frequency_formula, th.split_heating_rate);

    auto& lb = d.logical;
    lb.blocks = enc.blocks;
    lb.n_parallel = enc.n_parallel;
    lb.parallel_measurements = enc.parallel_measurements;
    lb.bits_per_block = enc.bits_per_block;
    lb.gate_time = budget::physical_gate_time(t.split_frequency_used, t.radial.secular_frequency, th.cooling_time,
                                              cfg.optics.phase_gate_time);
    lb.logical_rate = budget::logical_gate_rate(cfg.encoding.ancilla_width, lb.gate_time,
                                                d.readout.measurement_time, cfg.encoding.syndrome_time);
    lb.gamma2 = budget::gate_error_budget(cfg.optics.scattering_target, th.thermal_gate_error);
    lb.memory_error = budget::memory_error(cfg.encoding.memory_quality);
    lb.crash_probability = budget::crash_probability(lb.gamma2, cfg.overrides.crash);
    lb.n_logical_gates = budget::logical_capacity(lb.blocks, lb.crash_probability);
    return d;
}

std::vector<FieldEntry> field_table(const DerivedDesign& d)
{
    using P = Provenance;
    const auto& c = d.config;
    const auto& r = d.raman;
    const auto& t = d.trap;
    const auto& th = d.thermal;
    const auto& lb = d.logical;
    const P split_used = c.overrides.use_anchored_split_frequency ? P::AnchoredOverride : P::Formula;
    const P gate_rate_used = th.gate_heating_rate_override ? P::AnchoredOverride : P::Formula;

    std::vector<FieldEntry> f;
    auto in = [&](std::string key, double v, std::string unit) {
        std::string src = key;
        f.push_back({std::move(key), v, std::move(unit), P::Input, std::move(src)});
    };
    auto out = [&](std::string key, double v, std::string unit, P p, std::string src) {
        f.push_back({std::move(key), v, std::move(unit), p, std::move(src)});
    };

    in("species.linewidth", c.species.linewidth, "rad/s");
    in("species.wavelength", c.species.wavelength, "m");
    in("species.mass_number", c.species.mass_number, "");
    in("species.fine_structure", c.species.fine_structure, "rad/s");

    in("optics.collection_efficiency", c.optics.collection_efficiency, "");
    in("optics.mean_counts", c.optics.mean_counts, "");
    in("optics.count_threshold", c.optics.count_threshold, "");
    in("optics.beam_radius", c.optics.beam_radius, "m");
    in("optics.tau_p", c.optics.phase_gate_time, "s");
    in("optics.epsilon_s", c.optics.scattering_target, "");
    in("optics.readout_scatter_fraction", c.optics.readout_scatter_fraction, "");

    out("readout.p_meas_error", d.readout.p_meas_error, "", P::Formula, "optics::measurement_error");
    out("readout.measurement_time", d.readout.measurement_time, "s", P::Formula, "optics::measurement_time");
    out("readout.fluorescence_power", d.readout.fluorescence_power, "W", P::Formula, "optics::readout_budget");
    out("readout.beam_power", d.readout.readout_beam_power, "W", P::Formula, "optics::readout_budget");
    out("readout.background_ratio", d.readout.background_ratio, "", P::Formula, "optics::readout_budget");

    out("optics.saturation_intensity", r.saturation_intensity, "W/m^2", P::Formula, "optics::saturation_intensity");
    out("optics.recoil_frequency", r.recoil_frequency, "Hz", P::Formula, "optics::recoil_frequency");
    out("optics.scattering_floor", r.scattering_floor, "", P::Formula, "optics::scattering_floor");
    out("optics.stretch_frequency", r.stretch_frequency, "Hz", P::Formula, "optics::derive_raman");
    out("optics.com_frequency", r.com_frequency, "Hz", P::Formula, "optics::derive_raman");
    out("optics.lamb_dicke", r.lamb_dicke, "", P::Formula, "optics::derive_raman");
    out("optics.rabi_frequency", r.rabi_frequency, "rad/s", P::Formula, "optics::derive_raman");
    out("optics.intensity_at_floor", r.intensity_at_floor, "W/m^2", P::Formula, "optics::derive_raman");
    out("optics.intensity", r.intensity, "W/m^2", P::Formula, "optics::derive_raman");
    out("optics.beam_power", r.beam_power, "W", P::Formula, "optics::derive_raman");
    out("optics.total_power", r.total_power, "W", P::Formula, "optics::derive_raman");
    out("optics.min_scattering_infidelity", d.min_scattering_infidelity, "", P::Formula,
        "optics::minimum_scattering_infidelity");

    in("geometry.rho", c.geometry.ion_electrode_distance, "m");
    in("geometry.gate_zone_factor", c.geometry.gate_zone_factor, "");
    in("geometry.e_max", c.geometry.max_dc_field, "V/m");
    in("geometry.mu8", c.geometry.octopole_factor, "");
    out("trap.split_frequency_formula", t.split_frequency_formula, "Hz", P::Formula, "trapchip::split_frequency");
    out("trap.split_frequency_anchored", t.split_frequency_anchored, "Hz", P::AnchoredOverride,
        t.split_frequency_explicit ? "overrides.split_frequency" : "trapchip::split_frequency_anchor_ratio");
    out("trap.split_frequency", t.split_frequency_used, "Hz", split_used, "overrides.use_anchored_split_frequency");

    in("geometry.q_r", c.geometry.mathieu_q, "");
    in("geometry.mu4", c.geometry.quadrupole_factor, "");
    in("geometry.e_rf", c.geometry.rf_field, "V/m");
    out("trap.v_rms", t.radial.v_rms, "V", P::Formula, "trapchip::radial_chain");
    out("trap.radial_frequency", t.radial.secular_frequency, "Hz", P::Formula, "trapchip::radial_chain");
    out("trap.rf_drive", t.radial.rf_drive, "rad/s", P::Formula, "trapchip::radial_chain");
    out("trap.rf_frequency", t.radial.rf_drive / (2.0 * std::numbers::pi), "Hz", P::Formula,
        "trapchip::radial_chain");

    out("chip.area", t.electrical.area, "m^2", P::Formula, "trapchip::electrical_architecture");
    out("chip.n_electrodes", static_cast<double>(t.electrical.n_electrodes), "", P::Formula,
        "trapchip::electrical_architecture");
    out("chip.electrode_density", t.electrical.electrode_density, "m^-2", P::Formula,
        "trapchip::electrical_architecture");
    out("chip.capacitance", t.electrical.capacitance_per_pbit, "F", P::Formula, "trapchip::electrical_architecture");
    in("geometry.loss_tangent", c.geometry.loss_tangent, "");
    out("chip.rf_power_formula", t.electrical.rf_power, "W", P::Formula, "trapchip::electrical_architecture");
    out("chip.rf_power_anchored", t.rf_power_anchored, "W", P::AnchoredOverride, "trapchip::rf_power_anchor_ratio");

    in("encoding.nbar", c.heating.mean_vibration_target, "");
    in("geometry.a", c.heating.noise_coefficient, "(V m)^2/Hz");
    out("thermal.thermal_gate_error", th.thermal_gate_error, "", P::Formula, "trapchip::thermal_gate_error");
    out("thermal.cooling_time", th.cooling_time, "s", P::Formula, "trapchip::cooling_time");
    out("thermal.gate_heating_rate_formula", th.gate_heating_rate_formula, "1/s", P::Formula,
        "trapchip::heating_rate");
    out("thermal.gate_heating_rate", th.gate_heating_rate_used, "1/s", gate_rate_used,
        th.gate_heating_rate_override ? "overrides.gate_heating_rate" : "trapchip::heating_rate");
    out("thermal.gate_heating", th.gate_heating, "", P::Formula, "trapchip::heating_during");
    out("thermal.split_heating_rate", th.split_heating_rate, "1/s", P::Formula, "trapchip::heating_rate");
    out("thermal.split_heating", th.split_heating, "", P::Formula, "trapchip::heating_during");

    in("encoding.n_pbits", static_cast<double>(c.encoding.n_pbits), "");
    in("encoding.n", static_cast<double>(c.encoding.code.n), "");
    in("encoding.k", static_cast<double>(c.encoding.code.k), "");
    in("encoding.d", static_cast<double>(c.encoding.code.d), "");
    in("encoding.ancilla_size", static_cast<double>(c.encoding.ancilla_size), "");
    in("encoding.ancilla_width", static_cast<double>(c.encoding.ancilla_width), "");
    out("encoding.bits_per_block", static_cast<double>(lb.bits_per_block), "", P::Formula, "budget::encoding_derived");
    out("encoding.blocks", static_cast<double>(lb.blocks), "", P::Formula, "budget::encoding_derived");
    out("encoding.n_parallel", static_cast<double>(lb.n_parallel), "", P::Formula, "budget::encoding_derived");
    out("encoding.parallel_measurements", static_cast<double>(lb.parallel_measurements), "", P::Formula,
        "budget::encoding_derived");
    out("encoding.physical_qubit_ions", static_cast<double>(d.physical_qubit_ions), "", P::Formula,
        "budget::physical_qubit_ions");

    out("budget.gate_time", lb.gate_time, "s", P::Formula, "budget::physical_gate_time");
    in("encoding.t_sp", c.encoding.syndrome_time, "s");
    out("budget.logical_rate", lb.logical_rate, "Hz", P::Formula, "budget::logical_gate_rate");
    out("budget.gamma2", lb.gamma2, "", P::Formula, "budget::gate_error_budget");
    in("encoding.gamma1", c.encoding.gamma1, "");
    in("encoding.gamma_m", c.encoding.gamma_m, "");
    in("encoding.q", c.encoding.memory_quality, "");
    out("budget.memory_error", lb.memory_error, "", P::Formula, "budget::memory_error");
    out("budget.crash_probability", lb.crash_probability, "", P::Formula, "budget::crash_probability");
    out("budget.n_logical_gates", lb.n_logical_gates, "", P::Formula, "budget::logical_capacity");
    return f;
}

double field_value(const DerivedDesign& d, std::string_view key)
{
    for (const auto& e : field_table(d))
        if (e.key == key)
            return e.value;
    throw ValidationError("unknown output field '" + std::string(key) + "'", std::string(key));
}

// --- parameter registry -----------------------------------------------------

namespace {

struct Accessor
{
    ParamInfo info;
    std::function<double(const DesignConfig&)> get;
    std::function<void(DesignConfig&, double)> set;
};

template <class Member>
Accessor real(std::string key, std::string unit, Member member)
{
    return Accessor{
        {std::move(key), ParamKind::Real, std::move(unit)},
        [member](const DesignConfig& c) { return static_cast<double>(member(const_cast<DesignConfig&>(c))); },
        [member](DesignConfig& c, double v) { member(c) = v; },
    };
}

template <class Member>
Accessor integer(std::string key, Member member)
{
    return Accessor{
        {std::move(key), ParamKind::Integer, ""},
        [member](const DesignConfig& c) { return static_cast<double>(member(const_cast<DesignConfig&>(c))); },
        [member](DesignConfig& c, double v) {
            using T = std::remove_reference_t<decltype(member(c))>;
            member(c) = static_cast<T>(v);
        },
    };
}

template <class Member>
Accessor species_real(std::string key, std::string unit, Member member)
{
    Accessor a = real(std::move(key), std::move(unit), member);
    a.set = [member](DesignConfig& c, double v) {
        member(c) = v;
        c.species_ref.clear();
        c.species.data_provenance = DataProvenance::User;
    };
    return a;
}

template <class Member>
Accessor optional_real(std::string key, std::string unit, Member member)
{
    return Accessor{
        {std::move(key), ParamKind::OptionalReal, std::move(unit)},
        [member](const DesignConfig& c) {
            const auto& o = member(const_cast<DesignConfig&>(c));
            if (!o)
                throw ValidationError("parameter is unset", "");
            return *o;
        },
        [member](DesignConfig& c, double v) { member(c) = v; },
    };
}

const std::vector<Accessor>& accessors()
{
    static const std::vector<Accessor> table = [] {
        std::vector<Accessor> t;
        t.push_back({{"species.name", ParamKind::Text, ""}, nullptr, nullptr});
        t.push_back({{"species.provenance", ParamKind::Text, ""}, nullptr, nullptr});
        t.push_back(species_real("species.linewidth", "rad/s", [](DesignConfig& c) -> auto& { return c.species.linewidth; }));
        t.push_back(species_real("species.wavelength", "m", [](DesignConfig& c) -> auto& { return c.species.wavelength; }));
        t.push_back(species_real("species.mass_number", "", [](DesignConfig& c) -> auto& { return c.species.mass_number; }));
        t.push_back(species_real("species.fine_structure", "rad/s", [](DesignConfig& c) -> auto& { return c.species.fine_structure; }));

        t.push_back(real("geometry.rho", "m", [](DesignConfig& c) -> auto& { return c.geometry.ion_electrode_distance; }));
        t.push_back(real("geometry.gate_zone_factor", "", [](DesignConfig& c) -> auto& { return c.geometry.gate_zone_factor; }));
        t.push_back(real("geometry.mu4", "", [](DesignConfig& c) -> auto& { return c.geometry.quadrupole_factor; }));
        t.push_back(real("geometry.mu8", "", [](DesignConfig& c) -> auto& { return c.geometry.octopole_factor; }));
        t.push_back(real("geometry.e_max", "V/m", [](DesignConfig& c) -> auto& { return c.geometry.max_dc_field; }));
        t.push_back(real("geometry.e_rf", "V/m", [](DesignConfig& c) -> auto& { return c.geometry.rf_field; }));
        t.push_back(real("geometry.q_r", "", [](DesignConfig& c) -> auto& { return c.geometry.mathieu_q; }));
        t.push_back(real("geometry.loss_tangent", "", [](DesignConfig& c) -> auto& { return c.geometry.loss_tangent; }));
        t.push_back(real("geometry.a", "(V m)^2/Hz", [](DesignConfig& c) -> auto& { return c.heating.noise_coefficient; }));

        t.push_back(real("optics.collection_efficiency", "", [](DesignConfig& c) -> auto& { return c.optics.collection_efficiency; }));
        t.push_back(real("optics.mean_counts", "", [](DesignConfig& c) -> auto& { return c.optics.mean_counts; }));
        t.push_back(integer("optics.count_threshold", [](DesignConfig& c) -> auto& { return c.optics.count_threshold; }));
        t.push_back(real("optics.beam_radius", "m", [](DesignConfig& c) -> auto& { return c.optics.beam_radius; }));
        t.push_back(real("optics.tau_p", "s", [](DesignConfig& c) -> auto& { return c.optics.phase_gate_time; }));
        t.push_back(real("optics.epsilon_s", "", [](DesignConfig& c) -> auto& { return c.optics.scattering_target; }));
        t.push_back(real("optics.readout_scatter_fraction", "", [](DesignConfig& c) -> auto& { return c.optics.readout_scatter_fraction; }));

        t.push_back(integer("encoding.n_pbits", [](DesignConfig& c) -> auto& { return c.encoding.n_pbits; }));
        t.push_back(integer("encoding.n", [](DesignConfig& c) -> auto& { return c.encoding.code.n; }));
        t.push_back(integer("encoding.k", [](DesignConfig& c) -> auto& { return c.encoding.code.k; }));
        t.push_back(integer("encoding.d", [](DesignConfig& c) -> auto& { return c.encoding.code.d; }));
        t.push_back(integer("encoding.ancilla_size", [](DesignConfig& c) -> auto& { return c.encoding.ancilla_size; }));
        t.push_back(integer("encoding.ancilla_width", [](DesignConfig& c) -> auto& { return c.encoding.ancilla_width; }));
        t.push_back(real("encoding.t_sp", "s", [](DesignConfig& c) -> auto& { return c.encoding.syndrome_time; }));
        t.push_back(real("encoding.q", "", [](DesignConfig& c) -> auto& { return c.encoding.memory_quality; }));
        t.push_back(real("encoding.gamma1", "", [](DesignConfig& c) -> auto& { return c.encoding.gamma1; }));
        t.push_back(real("encoding.gamma_m", "", [](DesignConfig& c) -> auto& { return c.encoding.gamma_m; }));
        t.push_back(real("encoding.nbar", "", [](DesignConfig& c) -> auto& { return c.heating.mean_vibration_target; }));

        t.push_back(Accessor{{"overrides.use_anchored_split_frequency", ParamKind::Boolean, ""},
                             [](const DesignConfig& c) { return c.overrides.use_anchored_split_frequency ? 1.0 : 0.0; },
                             [](DesignConfig& c, double v) { c.overrides.use_anchored_split_frequency = v != 0.0; }});
        t.push_back(optional_real("overrides.split_frequency", "Hz", [](DesignConfig& c) -> auto& { return c.overrides.split_frequency; }));
        t.push_back(optional_real("overrides.gate_heating_rate", "1/s", [](DesignConfig& c) -> auto& { return c.overrides.gate_heating_rate; }));
        t.push_back(real("overrides.crash_anchor_gamma2", "", [](DesignConfig& c) -> auto& { return c.overrides.crash.anchor_gamma2; }));
        t.push_back(real("overrides.crash_anchor_probability", "", [](DesignConfig& c) -> auto& { return c.overrides.crash.anchor_probability; }));
        return t;
    }();
    return table;
}

const Accessor* find_accessor(std::string_view key)
{
    for (const auto& a : accessors())
        if (a.info.key == key)
            return &a;
    return nullptr;
}

const Accessor& require_accessor(std::string_view key)
{
    const Accessor* a = find_accessor(key);
    if (!a)
        throw ValidationError("unknown design parameter '" + std::string(key) + "'", std::string(key));
    return *a;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

const std::vector<ParamInfo>& design_parameters()
{
    static const std::vector<ParamInfo> infos = [] {
        std::vector<ParamInfo> v;
        for (const auto& a : accessors())
            v.push_back(a.info);
        return v;
    }();
    return infos;
}

const ParamInfo* find_parameter(std::string_view key)
{
    const Accessor* a = find_accessor(key);
    return a ? &a->info : nullptr;
}

double get_parameter(const DesignConfig& cfg, std::string_view key)
{
    const Accessor& a = require_accessor(key);
    if (a.info.kind == ParamKind::Text)
        throw ValidationError("parameter '" + std::string(key) + "' is not numeric", std::string(key));
    try {
        return a.get(cfg);
    } catch (const ValidationError&) {
        throw ValidationError("parameter '" + std::string(key) + "' is unset", std::string(key));
    }
}

void set_parameter(DesignConfig& cfg, std::string_view key, double value)
{
    const Accessor& a = require_accessor(key);
    if (a.info.kind == ParamKind::Text)
        throw ValidationError("parameter '" + std::string(key) + "' is not numeric", std::string(key));
    if (!std::isfinite(value))
        throw ValidationError("parameter '" + std::string(key) + "' must be finite", std::string(key));
    if (a.info.kind == ParamKind::Integer && std::trunc(value) != value)
        throw ValidationError("parameter '" + std::string(key) + "' must be an integer", std::string(key));
    a.set(cfg, value);
}

void set_species(DesignConfig& cfg, std::string_view name)
{
    cfg.species = load_species(name);
    cfg.species_ref = std::string(name);
}

void apply_override(DesignConfig& cfg, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ValidationError("override must have the form key=value: '" + std::string(assignment) + "'");
    const std::string_view key = trim(assignment.substr(0, eq));
    const std::string_view text = trim(assignment.substr(eq + 1));
    const Accessor& a = require_accessor(key);

    if (key == "species.name") {
        if (cfg.species_ref.empty())
            cfg.species.name = std::string(text);
        else
            set_species(cfg, text);
        return;
    }
    if (key == "species.provenance") {
        cfg.species.data_provenance = data_provenance_from_string(text);
        cfg.species_ref.clear();
        return;
    }
    if (a.info.kind == ParamKind::Boolean) {
        if (text == "true")
            return set_parameter(cfg, key, 1.0);
        if (text == "false")
            return set_parameter(cfg, key, 0.0);
        throw ValidationError("expected true or false for '" + std::string(key) + "'", std::string(key));
    }
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ValidationError("cannot parse number '" + std::string(text) + "' for '" + std::string(key) + "'",
                              std::string(key));
    set_parameter(cfg, key, value);
}

}  // namespace ionforge
