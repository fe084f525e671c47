#pragma once

#include "ionforge/atomdata.hpp"

namespace ionforge::trapchip {

struct TrapGeometry
{
    double ion_electrode_distance = 10e-6;  // rho, m
    double gate_zone_factor = 10.0;
    double octopole_factor = 0.02;          // mu_8
    double quadrupole_factor = 0.15;        // mu_4
    double max_dc_field = 2e8;              // E_max, V/m
    double rf_field = 1e8;                  // E_rf, V/m
    double mathieu_q = 0.3;
    double loss_tangent = 5e-4;

    bool operator==(const TrapGeometry&) const = default;
};

void validate(const TrapGeometry& g);

struct HeatingModel
{
    double noise_coefficient = 1e-26;  // a, (V m)^2 / Hz
    double mean_vibration_target = 0.5;

    bool operator==(const HeatingModel&) const = default;
};

inline constexpr int kHeatingExponent = 4;
inline constexpr double kNoiseCoefficientLow = 1e-27;
inline constexpr double kNoiseCoefficientHigh = 1e-25;

void validate(const HeatingModel& h);

/// True when a lies outside the empirically observed 1e-26 +/- 1 decade band.
bool noise_coefficient_out_of_band(double a);

struct ChipElectrical
{
    double area;                  // m^2
    long long n_electrodes;
    double electrode_density;     // m^-2
    double capacitance_per_pbit;  // F
    double rf_power;              // W
    double v_rms;                 // V
    double rf_drive;              // Omega, rad/s
};

struct RadialChain
{
    double secular_frequency;  // nu_r, Hz
    double rf_drive;           // Omega, rad/s
    double v_rms;              // V
};

/// c.o.m. frequency at the moment of splitting, evaluated in SI exactly as written.
double split_frequency(double mass_number, double octopole_factor, double max_dc_field, double rho);

RadialChain radial_chain(double mass_number, double mathieu_q, double quadrupole_factor, double rf_field,
                         double rho);

ChipElectrical electrical_architecture(long long n_pbits, long long n_parallel, double rho, double loss_tangent,
                                       double v_rms, double rf_drive);

/// d nbar/dt = e^2 (a/rho^4) / (4 m h nu). nu in Hz.
double heating_rate(double rho_effective, double noise_coefficient, double mode_frequency, double mass);

/// 0.3 pi^2 eta^4 nbar (nbar + 1)
double thermal_gate_error(double lamb_dicke, double mean_vibration);

double cooling_time(double mean_vibration, double com_frequency);

double heating_during(double duration, double rate);

/// Phonons gained over one split + recombine (2/nu_spl) at distance rho, with the
/// mode frequency evaluated from the split-frequency formula at that rho.
double split_heating(double rho, double mass_number, double octopole_factor, double max_dc_field,
                     double noise_coefficient);

// Tabulated anchors. The tabulated split frequency and r.f. dissipation disagree
// with the SI evaluation of their own formulas; both are carried.

inline constexpr double kTabulatedSplitFrequency = 15e6;  // Hz
inline constexpr double kTabulatedRfPower = 24e-3;        // W

/// tabulated / formula for nu_spl at the reference Cd+ design
double split_frequency_anchor_ratio();

/// tabulated / formula for the r.f. dissipation at the reference Cd+ design
double rf_power_anchor_ratio();

}  // namespace ionforge::trapchip
