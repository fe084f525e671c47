#pragma once

#include <array>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace ionforge {

struct PhysicalConstants
{
    double planck_h;
    double hbar;
    double speed_of_light;
    double elementary_charge;
    double atomic_mass_unit;
    double vacuum_permittivity;
};

/// CODATA-2018 values.
constexpr PhysicalConstants constants()
{
    constexpr double h = 6.62607015e-34;
    return PhysicalConstants{
        .planck_h = h,
        .hbar = h / (2.0 * std::numbers::pi),
        .speed_of_light = 299792458.0,
        .elementary_charge = 1.602176634e-19,
        .atomic_mass_unit = 1.66053906660e-27,
        .vacuum_permittivity = 8.8541878128e-12,
    };
}

enum class DataProvenance { Paper, ExternalReference, User };

std::string_view to_string(DataProvenance p);
DataProvenance data_provenance_from_string(std::string_view s);

/// Atomic constants of a qubit ion. Angular quantities are rad/s.
struct IonSpecies
{
    std::string name;
    double linewidth = 0.0;       // Gamma, rad/s
    double wavelength = 0.0;      // m
    double mass_number = 0.0;     // A
    double fine_structure = 0.0;  // omega_F, rad/s
    DataProvenance data_provenance = DataProvenance::User;

    double mass() const { return mass_number * constants().atomic_mass_unit; }

    bool operator==(const IonSpecies&) const = default;
};

/// Throws ValidationError naming the first violated invariant.
void validate(const IonSpecies& species);

/// Built-in registry lookup ("Cd+", "Ca+"). Throws ValidationError for unknown names.
IonSpecies load_species(std::string_view name);

/// Validates and returns a user-supplied record unchanged.
IonSpecies load_species(const IonSpecies& record);

std::vector<std::string> registered_species();

/// Which frequency-valued symbols are stored as rad/s and which as Hz.
struct UnitConvention
{
    std::array<std::string_view, 4> angular_symbols;
    std::array<std::string_view, 5> ordinary_symbols;
};

constexpr UnitConvention unit_convention()
{
    return UnitConvention{
        .angular_symbols = {"Gamma", "omega_F", "Omega_R", "Omega"},
        .ordinary_symbols = {"nu_spl", "nu_com", "nu_str", "nu_r", "R"},
    };
}

namespace units {

constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double micrometre = 1e-6;
constexpr double nanometre = 1e-9;
constexpr double microsecond = 1e-6;
constexpr double kilohertz = 1e3;
constexpr double megahertz = 1e6;
constexpr double terahertz = 1e12;
constexpr double square_centimetre = 1e-4;
constexpr double picofarad = 1e-12;
/// mW/um^2 expressed in W/m^2
constexpr double milliwatt_per_square_micrometre = 1e9;

/// 2*pi*f for an ordinary frequency f given in Hz.
constexpr double angular(double hertz) { return two_pi * hertz; }

}  // namespace units

}  // namespace ionforge
