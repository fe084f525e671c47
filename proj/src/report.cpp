#include "ionforge/report.hpp"

#include "ionforge/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace ionforge::report {

using nlohmann::ordered_json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Footnote identifiers; numbering follows first use.
enum class Note {
    SplitFrequency,
    RfPower,
    MeasurementTime,
    Leakage,
    CrashModel,
    MemoryError,
    GateHeatingOverride,
    NoiseBand,
    ExternalSpecies,
};

class Builder
{
public:
    explicit Builder(const DerivedDesign& d) : d_(d)
    {
        for (auto& e : field_table(d))
            fields_.emplace(e.key, std::move(e));
    }

    Row row(const std::string& key, std::string label, std::string symbol, std::string display_unit = "",
            double display_scale = 1.0, std::vector<Note> notes = {})
    {
        const auto it = fields_.find(key);
        if (it == fields_.end())
            throw std::logic_error("report row refers to unknown field " + key);
        const FieldEntry& f = it->second;
        Row r{key, std::move(label), std::move(symbol), f.value, f.unit, f.provenance, f.source, {},
              display_unit.empty() ? f.unit : std::move(display_unit), display_scale};
        for (Note n : notes)
            r.footnotes.push_back(note(n));
        return r;
    }

    int note(Note n)
    {
        for (std::size_t i = 0; i < used_.size(); ++i)
            if (used_[i] == n)
                return static_cast<int>(i) + 1;
        used_.push_back(n);
        return static_cast<int>(used_.size());
    }

    std::vector<std::string> footnote_texts() const
    {
        std::vector<std::string> out;
        for (Note n : used_)
            out.push_back(text(n));
        return out;
    }

private:
    static std::string fmt(double v)
    {
        std::array<char, 32> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 3);
        return std::string(buf.data(), res.ptr);
    }

    std::string text(Note n) const
    {
        const auto& t = d_.trap;
        const auto& th = d_.thermal;
        const auto& c = d_.config;
        switch (n) {
        case Note::SplitFrequency:
            return "Split frequency: the formula evaluated in SI units gives " + fmt(t.split_frequency_formula / 1e6) +
                   " MHz, while the tabulated design value is 15 MHz. The anchored value (" +
                   fmt(t.split_frequency_anchored / 1e6) + " MHz) is " +
                   (t.split_frequency_explicit ? "taken from the overrides section"
                                               : "the formula scaled by the Cd+ tabulated/formula ratio") +
                   ". The gate-time chain uses the " +
                   (c.overrides.use_anchored_split_frequency ? "anchored" : "formula") + " value.";
        case Note::RfPower:
            return "R.f. dissipation: with Omega in rad/s the formula gives " + fmt(d_.trap.electrical.rf_power) +
                   " W against the tabulated 24 mW (ratio " +
                   fmt(d_.trap.electrical.rf_power / d_.trap.rf_power_anchored) +
                   "). Both values are shown; neither feeds any other row.";
        case Note::MeasurementTime:
            return "Measurement time uses t_m = 4 cbar/(eps Gamma); the rougher 2000/Gamma estimate (about 10 us for "
                   "Cd+) is not used.";
        case Note::Leakage:
            return "Population leaked out of the qubit basis by Raman scattering is assumed to be repumped "
                   "perfectly; no leakage error term is included.";
        case Note::CrashModel:
            return "Crash probability is the anchored power law p = " + fmt(c.overrides.crash.anchor_probability) +
                   " * (gamma2 / " + fmt(c.overrides.crash.anchor_gamma2) +
                   ")^7; gamma1 and gamma_m do not enter it.";
        case Note::MemoryError:
            return "Memory error 1/Q is reported only; it is not coupled into the crash probability.";
        case Note::GateHeatingOverride:
            return "Gate-zone heating rate " + fmt(th.gate_heating_rate_used) +
                   " /s is taken from the overrides section; the noise model gives " +
                   fmt(th.gate_heating_rate_formula) + " /s.";
        case Note::NoiseBand:
            return "Noise coefficient a = " + fmt(c.heating.noise_coefficient) +
                   " (V m)^2/Hz lies outside the observed 1e-27..1e-25 band.";
        case Note::ExternalSpecies:
            return "Atomic constants for " + c.species.name +
                   " are sourced from standard atomic-data references, not from the design tables.";
        }
        return {};
    }

    const DerivedDesign& d_;
    std::map<std::string, FieldEntry> fields_;
    std::vector<Note> used_;
};

constexpr double MHz = 1e6;
constexpr double us = 1e-6;
constexpr double um = 1e-6;

}  // namespace

Report build_report(const DerivedDesign& d, const explorer::ConstraintReport& constraints, const ScenarioSpec& scenario)
{
    Builder b(d);
    Report r;
    r.species = d.config.species.name;
    const bool anchored_timing = d.config.overrides.use_anchored_split_frequency;

    if (d.config.species.data_provenance == DataProvenance::ExternalReference)
        b.note(Note::ExternalSpecies);

    Section encoding{"Encoding", {}};
    encoding.rows = {
        b.row("encoding.n_pbits", "n. ion pairs (p-bits)", "N"),
        b.row("encoding.n", "block code length", "n"),
        b.row("encoding.k", "block code logical qubits", "k"),
        b.row("encoding.d", "block code distance", "d"),
        b.row("encoding.ancilla_size", "ancilla size", "N_A"),
        b.row("encoding.ancilla_width", "ancilla width", "w"),
        b.row("encoding.bits_per_block", "data+anc. bits per block", "4n+k"),
        b.row("encoding.blocks", "n. blocks", "b"),
        b.row("encoding.n_parallel", "n. parallel operations", "N_P"),
        b.row("encoding.parallel_measurements", "n. parallel measurements", "bn"),
        b.row("encoding.physical_qubit_ions", "qubit ions (2 per p-bit)", "2N"),
    };
    Section performance{"Overall performance", {}};
    performance.rows = {
        b.row("budget.gate_time", "physical gate time", "tau_g", "us", us,
              anchored_timing ? std::vector<Note>{Note::SplitFrequency} : std::vector<Note>{}),
        b.row("encoding.t_sp", "syndrome processing time", "t_sp", "us", us),
        b.row("budget.logical_rate", "logical gate rate", "1/(2w tau_g + 2t_m + t_sp)", "kHz", 1e3),
        b.row("budget.gamma2", "2-p-bit gate error", "gamma2"),
        b.row("encoding.gamma1", "1-p-bit gate error", "gamma1"),
        b.row("encoding.gamma_m", "measurement error", "gamma_m"),
        b.row("budget.memory_error", "memory error", "1/Q", "", 1.0, {Note::MemoryError}),
        b.row("budget.crash_probability", "recovery crash probability", "p", "", 1.0, {Note::CrashModel}),
        b.row("budget.n_logical_gates", "n. logical gates", "1/(bp)"),
    };
    r.table1 = {encoding, performance};

    Section optical{"Optical", {}};
    optical.rows = {
        b.row("species.linewidth", "linewidth", "Gamma", "2pi MHz", kTwoPi * MHz),
        b.row("optics.collection_efficiency", "collection efficiency", "eps"),
        b.row("optics.mean_counts", "mean counts per ion", "c"),
        b.row("readout.p_meas_error", "P(0 or 1 count)", "(1+c)exp(-c)"),
        b.row("readout.measurement_time", "measurement time", "t_m = 4c/(eps Gamma)", "us", us,
              {Note::MeasurementTime}),
        b.row("species.wavelength", "wavelength", "lambda", "nm", 1e-9),
        b.row("optics.saturation_intensity", "saturation intensity", "I0"),
        b.row("species.mass_number", "mass number", "A"),
        b.row("optics.recoil_frequency", "recoil frequency", "R", "kHz", 1e3),
        b.row("species.fine_structure", "fine structure", "omega_F", "2pi THz", kTwoPi * 1e12),
        b.row("optics.scattering_floor", "scattered photons at local minimum", "P0"),
        b.row("optics.epsilon_s", "infidelity from photon scattering", "eps_s", "", 1.0, {Note::Leakage}),
        b.row("optics.tau_p", "phase-gate time", "tau_p", "us", us),
        b.row("optics.stretch_frequency", "stretch mode frequency", "nu_str", "MHz", MHz),
        b.row("optics.com_frequency", "c.o.m. mode frequency", "nu_com", "MHz", MHz),
        b.row("optics.lamb_dicke", "stretch-mode Lamb Dicke param.", "eta"),
        b.row("optics.rabi_frequency", "carrier Raman Rabi frequency", "Omega_R", "2pi MHz", kTwoPi * MHz),
        b.row("optics.intensity_at_floor", "laser intensity for P0", "I_P0", "mW/um^2", 1e9),
        b.row("optics.intensity", "intensity per laser beam", "I", "mW/um^2", 1e9),
        b.row("optics.beam_radius", "beam radius", "r", "um", um),
        b.row("optics.beam_power", "power per beam", "pi r^2 I", "mW", 1e-3),
        b.row("optics.total_power", "total laser power", "2 N_P pi r^2 I", "W", 1.0),
        b.row("readout.fluorescence_power", "fluorescence power per ion", "Gamma h c/2 lambda"),
        b.row("readout.beam_power", "readout beam power", "pi r^2 I0", "uW", 1e-6),
        b.row("readout.background_ratio", "readout background / fluorescence", ""),
    };
    Section axial{"Trapping: axial (d.c.)", {}};
    axial.rows = {
        b.row("geometry.rho", "nearest distance to electrode", "rho", "um", um),
        b.row("geometry.e_max", "d.c. electric field at electrode", "E_max", "V/um", 1e6),
        b.row("geometry.mu8", "octopole geometric factor", "mu8"),
        b.row("trap.split_frequency_formula", "c.o.m. frequency at split (formula)", "nu_spl", "MHz", MHz,
              {Note::SplitFrequency}),
        b.row("trap.split_frequency_anchored", "c.o.m. frequency at split (anchored)", "nu_spl", "MHz", MHz,
              {Note::SplitFrequency}),
    };
    Section radial{"Trapping: radial (r.f.)", {}};
    radial.rows = {
        b.row("geometry.q_r", "Mathieu q-parameter", "q_r"),
        b.row("geometry.mu4", "r.f. quadrupole geometric factor", "mu4"),
        b.row("geometry.e_rf", "r.f. electric field amplitude", "E_rf", "V/um", 1e6),
        b.row("trap.v_rms", "r.m.s. voltage", "V_rms"),
        b.row("trap.radial_frequency", "radial secular freq.", "nu_r", "MHz", MHz),
        b.row("trap.rf_frequency", "r.f. frequency", "Omega/2pi", "MHz", MHz),
    };
    Section electrical{"Electrical architecture", {}};
    electrical.rows = {
        b.row("chip.area", "total area", "50 N rho^2", "cm^2", 1e-4),
        b.row("chip.n_electrodes", "n. d.c. electrodes", "30 N_P + 20 N"),
        b.row("chip.electrode_density", "electrode density", "", "cm^-2", 1e4),
        b.row("chip.capacitance", "capacitance per p-bit", "C = 20 rho eps0", "pF", 1e-12),
        b.row("geometry.loss_tangent", "loss tangent", "tan delta"),
        b.row("chip.rf_power_formula", "total r.f. power dissipated (formula)", "N V_rms^2 Omega C tan delta", "mW",
              1e-3, {Note::RfPower}),
        b.row("chip.rf_power_anchored", "total r.f. power dissipated (anchored)", "", "mW", 1e-3, {Note::RfPower}),
    };
    std::vector<Note> heating_notes;
    if (d.thermal.gate_heating_rate_override)
        heating_notes.push_back(Note::GateHeatingOverride);
    std::vector<Note> noise_notes;
    if (trapchip::noise_coefficient_out_of_band(d.config.heating.noise_coefficient))
        noise_notes.push_back(Note::NoiseBand);
    Section thermal{"Thermal", {}};
    thermal.rows = {
        b.row("encoding.nbar", "mean vibration number", "nbar"),
        b.row("thermal.thermal_gate_error", "Lamb Dicke gate error", "P_nbar"),
        b.row("thermal.cooling_time", "cooling time", "1/(nbar nu_com)", "us", us),
        b.row("geometry.a", "surface noise coefficient", "a", "", 1.0, noise_notes),
        b.row("geometry.gate_zone_factor", "gate-zone distance factor", ""),
        b.row("thermal.gate_heating_rate_formula", "heating rate in gate zone (noise model)", "dn/dt", "1/ms", 1e3),
        b.row("thermal.gate_heating_rate", "heating rate in gate zone (used)", "dn/dt", "1/ms", 1e3, heating_notes),
        b.row("thermal.gate_heating", "heating during phase gate", "tau_p dn/dt"),
        b.row("thermal.split_heating", "heating during split", "2/nu_spl dn/dt"),
    };
    r.table2 = {optical, axial, radial, electrical, thermal};

    for (const auto& e : constraints.entries)
        r.constraints.push_back({e.name, e.relation, e.bound, e.actual, e.pass, e.source});

    auto scenario_row = [](std::string key, std::string label, double v, std::string unit, std::string source,
                           std::string display_unit = "", double scale = 1.0) {
        Row row{std::move(key), std::move(label), "", v, unit, Provenance::Formula, std::move(source), {},
                display_unit.empty() ? unit : display_unit, scale};
        return row;
    };
    if (scenario.pipelining_scale) {
        const auto p = explorer::scenario_ancilla_pipelining(d, *scenario.pipelining_scale);
        const std::string src = "explorer::scenario_ancilla_pipelining";
        Section s{"Scenario: ancilla pipelining", {}};
        s.rows = {
            scenario_row("scenario.pipelining.scale", "resource scale", p.scale, "", src),
            scenario_row("scenario.pipelining.recovery_time", "recovery network time", p.recovery_time, "s", src, "us", us),
            scenario_row("scenario.pipelining.logical_rate", "logical gate rate", p.logical.logical_rate, "Hz", src, "kHz", 1e3),
            scenario_row("scenario.pipelining.n_pbits", "n. p-bits", p.n_pbits, "", src),
            scenario_row("scenario.pipelining.n_parallel", "n. parallel operations", p.n_parallel, "", src),
            scenario_row("scenario.pipelining.n_beams", "n. gate laser beams", p.n_beams, "", src),
            scenario_row("scenario.pipelining.n_electrodes", "n. d.c. electrodes", p.n_electrodes, "", src),
            scenario_row("scenario.pipelining.total_laser_power", "total laser power", p.total_laser_power, "W", src),
        };
        r.scenarios.push_back(std::move(s));
    }
    if (scenario.redundancy) {
        const auto m = explorer::scenario_measurement_redundancy(d, *scenario.redundancy);
        const std::string src = "explorer::scenario_measurement_redundancy";
        Section s{"Scenario: majority-vote readout", {}};
        s.rows = {
            scenario_row("scenario.redundancy.copies", "ions per measurement", m.copies, "", src),
            scenario_row("scenario.redundancy.measurement_time", "measurement time", m.measurement_time, "s", src, "us", us),
            scenario_row("scenario.redundancy.p_meas_error", "measurement error", m.p_meas_error, "", src),
            scenario_row("scenario.redundancy.logical_rate", "logical gate rate", m.logical.logical_rate, "Hz", src, "kHz", 1e3),
            scenario_row("scenario.redundancy.optimal_copies", "best odd copy count",
                         explorer::optimal_redundancy(d.readout.measurement_time, d.config.optics.phase_gate_time), "",
                         "explorer::optimal_redundancy"),
        };
        r.scenarios.push_back(std::move(s));
    }
    if (scenario.noise_gamma) {
        const double n = explorer::noise_scaling_rule(*scenario.noise_gamma, d.logical.gamma2,
                                                      static_cast<double>(d.config.encoding.n_pbits));
        const std::string src = "explorer::noise_scaling_rule";
        Section s{"Scenario: noise scaling", {}};
        s.rows = {
            scenario_row("scenario.noise.gamma", "physical gate error", *scenario.noise_gamma, "", src),
            scenario_row("scenario.noise.gamma_ref", "reference gate error", d.logical.gamma2, "", src),
            scenario_row("scenario.noise.n_pbits", "n. p-bits required", n, "", src),
        };
        r.scenarios.push_back(std::move(s));
    }

    r.footnotes = b.footnote_texts();
    return r;
}

Format format_from_string(std::string_view name)
{
    if (name == "human")
        return Format::Human;
    if (name == "machine")
        return Format::Machine;
    throw ValidationError("unknown report format '" + std::string(name) + "'", "format");
}

namespace {

std::string human_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    std::array<char, 32> buf{};
    const double mag = std::abs(v);
    std::to_chars_result res;
    if (v == std::trunc(v) && mag < 1e7)
        res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 0);
    else if (mag != 0.0 && (mag < 1e-3 || mag >= 1e7))
        res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 3);
    else
        res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
    return std::string(buf.data(), res.ptr);
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

char provenance_marker(Provenance p)
{
    switch (p) {
    case Provenance::Input: return 'i';
    case Provenance::Formula: return 'f';
    case Provenance::AnchoredOverride: return 'a';
    }
    return 'f';
}

void render_sections(std::ostringstream& os, const std::vector<Section>& sections)
{
    std::size_t label_w = 0, symbol_w = 0;
    for (const auto& s : sections)
        for (const auto& r : s.rows) {
            label_w = std::max(label_w, r.label.size());
            symbol_w = std::max(symbol_w, r.symbol.size());
        }
    for (const auto& s : sections) {
        os << s.title << "\n";
        for (const auto& r : s.rows) {
            std::string value = human_number(r.value / r.display_scale);
            if (!r.display_unit.empty())
                value += " " + r.display_unit;
            std::string notes;
            for (int n : r.footnotes)
                notes += " [" + std::to_string(n) + "]";
            os << "  " << pad(r.label, label_w) << "  " << pad(r.symbol, symbol_w) << "  " << pad(value, 18) << " ("
               << provenance_marker(r.provenance) << ")" << notes << "\n";
        }
    }
}

ordered_json row_json(const Row& r)
{
    ordered_json j;
    j["key"] = r.key;
    j["label"] = r.label;
    j["symbol"] = r.symbol;
    j["value"] = r.value;
    j["unit"] = r.unit;
    j["provenance"] = std::string(to_string(r.provenance));
    j["source"] = r.source;
    j["footnotes"] = r.footnotes;
    j["display_unit"] = r.display_unit;
    j["display_scale"] = r.display_scale;
    return j;
}

ordered_json sections_json(const std::vector<Section>& sections)
{
    ordered_json arr = ordered_json::array();
    for (const auto& s : sections) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : s.rows)
            rows.push_back(row_json(r));
        arr.push_back(ordered_json{{"title", s.title}, {"rows", rows}});
    }
    return arr;
}

double json_number(const ordered_json& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::vector<Section> sections_from_json(const ordered_json& arr)
{
    std::vector<Section> out;
    for (const auto& s : arr) {
        Section sec{s.at("title").get<std::string>(), {}};
        for (const auto& j : s.at("rows")) {
            Row r;
            r.key = j.at("key").get<std::string>();
            r.label = j.at("label").get<std::string>();
            r.symbol = j.at("symbol").get<std::string>();
            r.value = json_number(j.at("value"));
            r.unit = j.at("unit").get<std::string>();
            r.provenance = provenance_from_string(j.at("provenance").get<std::string>());
            r.source = j.at("source").get<std::string>();
            r.footnotes = j.at("footnotes").get<std::vector<int>>();
            r.display_unit = j.at("display_unit").get<std::string>();
            r.display_scale = j.at("display_scale").get<double>();
            sec.rows.push_back(std::move(r));
        }
        out.push_back(std::move(sec));
    }
    return out;
}

constexpr const char* kMachineFormat = "ion-forge-report/1";

}  // namespace

std::string render_report(const Report& r, Format format)
{
    if (format == Format::Machine) {
        ordered_json j;
        j["format"] = kMachineFormat;
        j["species"] = r.species;
        j["table1"] = sections_json(r.table1);
        j["table2"] = sections_json(r.table2);
        if (!r.scenarios.empty())
            j["scenarios"] = sections_json(r.scenarios);
        ordered_json cs = ordered_json::array();
        bool all = true;
        for (const auto& c : r.constraints) {
            cs.push_back(ordered_json{{"name", c.name},
                                      {"relation", c.relation},
                                      {"bound", c.bound},
                                      {"actual", c.actual},
                                      {"pass", c.pass},
                                      {"source", c.source}});
            all = all && c.pass;
        }
        j["constraints"] = cs;
        j["constraints_pass"] = all;
        j["footnotes"] = r.footnotes;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "ion-forge design report: " << r.species << "\n\n";
    os << "Table 1. Logical parameters\n";
    render_sections(os, r.table1);
    os << "\nTable 2. Physical parameters\n";
    render_sections(os, r.table2);
    if (!r.scenarios.empty()) {
        os << "\nScenarios\n";
        render_sections(os, r.scenarios);
    }
    if (!r.constraints.empty()) {
        os << "\nConstraints\n";
        std::size_t w = 0;
        for (const auto& c : r.constraints)
            w = std::max(w, c.name.size());
        for (const auto& c : r.constraints)
            os << "  " << (c.pass ? "PASS " : "FAIL ") << pad(c.name, w) << "  " << human_number(c.actual) << " "
               << c.relation << " " << human_number(c.bound) << "\n";
    }
    os << "\nProvenance: (i) input, (f) formula, (a) anchored override\n";
    if (!r.footnotes.empty()) {
        os << "\nNotes\n";
        for (std::size_t i = 0; i < r.footnotes.size(); ++i)
            os << "  [" << i + 1 << "] " << r.footnotes[i] << "\n";
    }
    return os.str();
}

Report parse_machine_report(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("machine report is not valid JSON: ") + e.what(), "", 0);
    }
    try {
        if (j.at("format").get<std::string>() != kMachineFormat)
            throw ParseError("unsupported machine report format", "format", 0);
        Report r;
        r.species = j.at("species").get<std::string>();
        r.table1 = sections_from_json(j.at("table1"));
        r.table2 = sections_from_json(j.at("table2"));
        if (j.contains("scenarios"))
            r.scenarios = sections_from_json(j.at("scenarios"));
        for (const auto& c : j.at("constraints"))
            r.constraints.push_back({c.at("name").get<std::string>(), c.at("relation").get<std::string>(),
                                     json_number(c.at("bound")), json_number(c.at("actual")),
                                     c.at("pass").get<bool>(), c.at("source").get<std::string>()});
        r.footnotes = j.at("footnotes").get<std::vector<std::string>>();
        return r;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("malformed machine report: ") + e.what(), "", 0);
    }
}

std::string render_constraints(const explorer::ConstraintReport& c, Format format)
{
    if (format == Format::Machine) {
        ordered_json j;
        j["format"] = "ion-forge-check/1";
        j["pass"] = c.pass();
        ordered_json arr = ordered_json::array();
        for (const auto& e : c.entries)
            arr.push_back(ordered_json{{"name", e.name},
                                       {"relation", e.relation},
                                       {"bound", e.bound},
                                       {"actual", e.actual},
                                       {"pass", e.pass},
                                       {"source", e.source}});
        j["constraints"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    std::size_t w = 0;
    for (const auto& e : c.entries)
        w = std::max(w, e.name.size());
    for (const auto& e : c.entries)
        os << (e.pass ? "PASS " : "FAIL ") << pad(e.name, w) << "  " << human_number(e.actual) << " " << e.relation
           << " " << human_number(e.bound) << "  (" << e.source << ")\n";
    os << (c.pass() ? "design feasible\n" : "design infeasible\n");
    return os.str();
}

std::string render_sweep(const explorer::SweepResult& result, const explorer::SweepSpec& spec, Format format)
{
    if (format == Format::Machine) {
        ordered_json j;
        j["format"] = "ion-forge-sweep/1";
        ordered_json axes = ordered_json::array();
        for (const auto& a : spec.axes)
            axes.push_back(ordered_json{{"name", a.name},
                                        {"min", a.min},
                                        {"max", a.max},
                                        {"steps", a.steps},
                                        {"scale", a.scale == explorer::Scale::Log ? "log" : "linear"}});
        j["axes"] = axes;
        j["shape"] = result.shape;
        j["objective"] = spec.objective;
        ordered_json points = ordered_json::array();
        for (const auto& p : result.points) {
            ordered_json pj;
            pj["coordinates"] = p.coordinates;
            pj["feasible"] = p.feasible;
            if (!spec.objective.empty())
                pj["objective"] = p.objective;
            ordered_json cons = ordered_json::object();
            for (const auto& c : spec.constraints)
                cons[c.field] = field_value(p.design, c.field);
            for (const auto& e : explorer::check_constraints(p.design).entries)
                cons[e.name] = ordered_json{{"actual", e.actual}, {"pass", e.pass}};
            pj["constraints"] = cons;
            points.push_back(pj);
        }
        j["points"] = points;
        j["argmin"] = result.argmin ? ordered_json(*result.argmin) : ordered_json(nullptr);
        j["argmax"] = result.argmax ? ordered_json(*result.argmax) : ordered_json(nullptr);
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "ion-forge sweep: " << result.points.size() << " points";
    if (!spec.objective.empty())
        os << ", objective " << spec.objective;
    os << "\n\n";
    for (const auto& a : spec.axes)
        os << pad(a.name, 22);
    if (!spec.objective.empty())
        os << pad("objective", 16);
    os << "feasible\n";
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const auto& p = result.points[i];
        for (double c : p.coordinates)
            os << pad(human_number(c), 22);
        if (!spec.objective.empty())
            os << pad(human_number(p.objective), 16);
        os << (p.feasible ? "yes" : "no");
        if (result.argmin && *result.argmin == i)
            os << "  <- min";
        if (result.argmax && *result.argmax == i)
            os << "  <- max";
        os << "\n";
    }
    return os.str();
}

std::string render_optimize(const explorer::OptimizeResult& result, const explorer::OptimizeSpec& spec,
                            Format format)
{
    const auto constraints = explorer::check_constraints(result.design);
    if (format == Format::Machine) {
        ordered_json j;
        j["format"] = "ion-forge-optimize/1";
        j["objective"] = spec.objective;
        j["goal"] = spec.goal == explorer::Goal::Minimize ? "minimize" : "maximize";
        j["found"] = result.found;
        ordered_json params = ordered_json::object();
        for (std::size_t i = 0; i < spec.parameters.size(); ++i)
            params[spec.parameters[i].name] = result.parameters[i];
        j["parameters"] = params;
        j["objective_value"] = result.objective;
        j["evaluations"] = result.evaluations;
        j["total_violation"] = result.total_violation;
        ordered_json cons = ordered_json::array();
        for (const auto& c : spec.constraints)
            cons.push_back(ordered_json{{"field", c.field},
                                        {"relation", c.relation},
                                        {"bound", c.bound},
                                        {"actual", field_value(result.design, c.field)}});
        for (const auto& e : constraints.entries)
            cons.push_back(ordered_json{{"field", e.name},
                                        {"relation", e.relation},
                                        {"bound", e.bound},
                                        {"actual", e.actual}});
        j["constraints"] = cons;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ion-forge optimize: " << (spec.goal == explorer::Goal::Minimize ? "minimize " : "maximize ")
       << spec.objective << "\n";
    os << (result.found ? "feasible optimum found" : "no feasible point; nearest to feasible shown") << " after "
       << result.evaluations << " evaluations\n\n";
    for (std::size_t i = 0; i < spec.parameters.size(); ++i)
        os << "  " << pad(spec.parameters[i].name, 28) << human_number(result.parameters[i]) << "\n";
    os << "  " << pad(spec.objective, 28) << human_number(result.objective) << "\n\nConstraints\n";
    for (const auto& c : spec.constraints) {
        const double v = field_value(result.design, c.field);
        os << "  " << (c.satisfied(v) ? "PASS " : "FAIL ") << pad(c.field, 28) << human_number(v) << " "
           << c.relation << " " << human_number(c.bound) << "\n";
    }
    for (const auto& e : constraints.entries)
        os << "  " << (e.pass ? "PASS " : "FAIL ") << pad(e.name, 28) << human_number(e.actual) << " " << e.relation
           << " " << human_number(e.bound) << "\n";
    return os.str();
}

}  // namespace ionforge::report
