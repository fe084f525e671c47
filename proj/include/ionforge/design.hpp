#pragma once

#include "ionforge/atomdata.hpp"
#include "ionforge/budget.hpp"
#include "ionforge/optics.hpp"
#include "ionforge/trapchip.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ionforge {

struct OpticsInputs
{
    double collection_efficiency = 0.02;
    double mean_counts = 10.0;
    int count_threshold = 2;
    double beam_radius = 2e-6;
    double phase_gate_time = 0.5e-6;
    double scattering_target = 4e-5;
    double readout_scatter_fraction = optics::kMaxReadoutScatterFraction;

    bool operator==(const OpticsInputs&) const = default;
};

struct Overrides
{
    /// Use the anchored split frequency in the timing chain (else the formula value).
    bool use_anchored_split_frequency = true;
    /// Explicit anchored split frequency, Hz. Unset: formula x tabulated anchor ratio.
    std::optional<double> split_frequency;
    /// Gate-zone heating rate, 1/s, replacing the noise-model value in the gate budget.
    std::optional<double> gate_heating_rate;
    budget::CrashModel crash;

    bool operator==(const Overrides&) const = default;
};

/// Every free parameter of a machine design.
struct DesignConfig
{
    /// Registry name when the species came from the registry, empty for custom records.
    std::string species_ref = "Cd+";
    IonSpecies species = load_species("Cd+");
    trapchip::TrapGeometry geometry;
    trapchip::HeatingModel heating;
    OpticsInputs optics;
    budget::EncodingParams encoding;
    Overrides overrides;

    bool operator==(const DesignConfig&) const = default;
};

void validate(const DesignConfig& cfg);

enum class Provenance { Input, Formula, AnchoredOverride };
std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

struct TrapDerived
{
    double split_frequency_formula;   // Hz
    double split_frequency_anchored;  // Hz
    bool split_frequency_explicit;    // anchored value came from overrides
    double split_frequency_used;      // Hz
    trapchip::RadialChain radial;
    trapchip::ChipElectrical electrical;
    double rf_power_anchored;         // W
};

struct ThermalDerived
{
    double thermal_gate_error;        // P_nbar
    double cooling_time;              // s
    double gate_heating_rate_formula; // 1/s
    double gate_heating_rate_used;    // 1/s
    bool gate_heating_rate_override;
    double gate_heating;              // delta nbar during tau_p
    double split_heating_rate;        // 1/s at rho, nu_spl formula
    double split_heating;             // delta nbar during 2/nu_spl
};

/// Complete computed record for one design point.
struct DerivedDesign
{
    DesignConfig config;
    optics::ReadoutDerived readout;
    optics::RamanDerived raman;
    bool raman_feasible;
    double min_scattering_infidelity;  // eta P0
    TrapDerived trap;
    ThermalDerived thermal;
    budget::LogicalBudget logical;
    long long physical_qubit_ions;
};

/// Runs atomdata -> optics -> trapchip -> budget. Throws ValidationError on
/// invalid input; an unreachable scattering target is recorded, not thrown.
DerivedDesign derive(const DesignConfig& cfg);

/// One traceable number of a derived design.
struct FieldEntry
{
    std::string key;
    double value;
    std::string unit;
    Provenance provenance;
    std::string source;  // producing operation, or the input key
};

/// All numbers of a derived design in a fixed order.
std::vector<FieldEntry> field_table(const DerivedDesign& d);

/// Looks up a field by key. Throws ValidationError for unknown keys.
double field_value(const DerivedDesign& d, std::string_view key);

// Dotted-key access to DesignConfig ("geometry.rho", "optics.tau_p", ...).

enum class ParamKind { Real, Integer, Boolean, OptionalReal, Text };

struct ParamInfo
{
    std::string key;
    ParamKind kind;
    std::string unit;
};

const std::vector<ParamInfo>& design_parameters();
const ParamInfo* find_parameter(std::string_view key);

/// Throws ValidationError for unknown keys, unset optionals and text fields.
double get_parameter(const DesignConfig& cfg, std::string_view key);

/// Integer parameters require an integral value. Throws ValidationError.
void set_parameter(DesignConfig& cfg, std::string_view key, double value);

/// Applies "key=value"; value is parsed as a number, boolean, or species name.
void apply_override(DesignConfig& cfg, std::string_view assignment);

/// Replaces the species by a registry entry.
void set_species(DesignConfig& cfg, std::string_view name);

}  // namespace ionforge
