#pragma once

namespace ionforge::budget {

struct Code
{
    long long n = 127;
    long long k = 29;
    long long d = 15;

    bool operator==(const Code&) const = default;
};

struct EncodingParams
{
    long long n_pbits = 6444;
    Code code;
    long long ancilla_size = 1939;  // N_A
    long long ancilla_width = 47;   // w
    double syndrome_time = 5e-6;    // t_sp, s
    double memory_quality = 1e6;    // Q
    double gamma1 = 1e-3;
    double gamma_m = 1e-3;

    bool operator==(const EncodingParams&) const = default;
};

void validate(const EncodingParams& p);

struct EncodingDerived
{
    long long blocks;
    long long n_parallel;
    long long parallel_measurements;
    long long bits_per_block;

    bool operator==(const EncodingDerived&) const = default;
};

EncodingDerived encoding_derived(const EncodingParams& p);

/// Physical qubit ions carrying p-bits (two per p-bit), excluding coolant ions.
long long physical_qubit_ions(long long n_pbits);

/// split+recombine, move, cool, operate
double physical_gate_time(double split_frequency, double radial_frequency, double cooling_time,
                          double phase_gate_time);

/// 1 / (recovery + 2 t_m + t_sp) for an arbitrary recovery-network duration.
double logical_rate_from_recovery(double recovery_time, double measurement_time, double syndrome_time);

double logical_gate_rate(long long ancilla_width, double gate_time, double measurement_time,
                         double syndrome_time);

double gate_error_budget(double scattering_infidelity, double thermal_error);

struct CrashModel
{
    double anchor_gamma2 = 1e-4;
    double anchor_probability = 1e-10;

    bool operator==(const CrashModel&) const = default;
};

inline constexpr int kCrashExponent = 7;

double crash_probability(double gamma2, const CrashModel& model = {});

/// 1/(b p); +infinity when p == 0.
double logical_capacity(long long blocks, double crash_probability);

double memory_error(double memory_quality);

struct LogicalBudget
{
    long long blocks;
    long long n_parallel;
    long long parallel_measurements;
    long long bits_per_block;
    double gate_time;        // tau_g, s
    double logical_rate;     // Hz
    double gamma2;
    double memory_error;
    double crash_probability;
    double n_logical_gates;
};

}  // namespace ionforge::budget
