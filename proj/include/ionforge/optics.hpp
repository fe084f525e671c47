#pragma once

#include "ionforge/atomdata.hpp"

namespace ionforge::optics {

// Readout fluorescence budget.

struct ReadoutConfig
{
    double collection_efficiency = 0.02;
    double mean_counts = 10.0;
    int count_threshold = 2;
    double beam_radius = 2e-6;  // m
    /// Fraction of the readout beam power scattered into the detector path.
    double scatter_fraction = 1e-5;
};

void validate(const ReadoutConfig& cfg);

struct ReadoutDerived
{
    double measurement_time;       // s
    double p_meas_error;
    double fluorescence_power;     // W
    double readout_beam_power;     // W
    double max_scatter_fraction;
    /// scattered background over fluorescence at the configured scatter fraction
    double background_ratio;
};

/// Largest readout scatter fraction tolerated against the fluorescence signal.
inline constexpr double kMaxReadoutScatterFraction = 1e-5;

double saturation_intensity(const IonSpecies& species);
double recoil_frequency(const IonSpecies& species);

/// P(Poisson(mean_counts) < threshold).
double measurement_error(double mean_counts, int threshold = 2);

double measurement_time(double mean_counts, double collection_efficiency, const IonSpecies& species);

ReadoutDerived readout_budget(const IonSpecies& species, const ReadoutConfig& cfg);

// Raman gate chain.

struct RamanConfig
{
    double phase_gate_time = 0.5e-6;  // tau_p, s
    double scattering_target = 4e-5;  // epsilon_s
    double beam_radius = 2e-6;        // m
    long long n_parallel = 990;       // N_P
};

void validate(const RamanConfig& cfg);

struct RamanDerived
{
    double stretch_frequency;      // nu_str, Hz
    double com_frequency;          // nu_com, Hz
    double lamb_dicke;             // eta
    double rabi_frequency;         // Omega_R, rad/s
    double saturation_intensity;   // I0, W/m^2
    double recoil_frequency;       // R, Hz
    double scattering_floor;       // P0
    double intensity_at_floor;     // I_P0, W/m^2
    double intensity;              // I, W/m^2
    double beam_power;             // W
    double total_power;            // W
};

/// Photons scattered per carrier pi-pulse at the inter-fine-structure minimum.
double scattering_floor(const IonSpecies& species);

/// Lowest reachable epsilon_s for the given Lamb-Dicke parameter (I -> infinity).
double minimum_scattering_infidelity(double lamb_dicke, double scattering_floor);

/// Full Raman chain. Throws InfeasibleError if the scattering target is at or
/// below eta*P0.
RamanDerived derive_raman(const IonSpecies& species, const RamanConfig& cfg);

/// Same chain but never throws on an unreachable target: the intensity and
/// power fields become +infinity instead.
RamanDerived derive_raman_unchecked(const IonSpecies& species, const RamanConfig& cfg);

/// Forward model (I_P0/I + eta^2) P0 / eta.
double scattering_infidelity(double intensity, const RamanDerived& derived);

/// Operating point against which the gate-time scaling law is applied.
struct GateTimeReference
{
    double phase_gate_time;    // s
    double intensity;          // W/m^2
    double wavelength;         // m
    double scattering_target;
    double mass;               // kg
};

/// tau_p' for new (I, lambda, epsilon_s, m) under tau_p ~ (I lambda eps_s / m)^(-1/2).
double gate_time_scaling(const GateTimeReference& reference, double intensity, double wavelength,
                         double scattering_target, double mass);

}  // namespace ionforge::optics
