#pragma once

#include "ionforge/design.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ionforge::explorer {

// Feasibility constraints.

struct ConstraintEntry
{
    std::string name;
    std::string relation;  // "<=" or ">="
    double bound;
    double actual;
    bool pass;
    std::string source;
};

struct ConstraintReport
{
    std::vector<ConstraintEntry> entries;

    bool pass() const;
    const ConstraintEntry* find(std::string_view name) const;
};

struct ConstraintBounds
{
    double split_heating = 1.0;
    double gate_heating = 0.01;
    double readout_scatter_fraction = optics::kMaxReadoutScatterFraction;
    double max_dc_field = 2e8;
    double gate_zone_rho_over_lambda = 10.0;
    double gamma1 = 1e-3;
    double gamma_m = 1e-3;
};

ConstraintReport check_constraints(const DerivedDesign& d, const ConstraintBounds& bounds = {});

// Heating lower bound on rho.

inline constexpr double kRhoBracketLow = 0.1e-6;
inline constexpr double kRhoBracketHigh = 1e-3;

/// Smallest rho with split heating <= 1 phonon, by bisection on
/// [kRhoBracketLow, kRhoBracketHigh] to 1e-6 relative. Returns the lower bracket
/// edge when the bound is nowhere binding (a == 0); throws InfeasibleError when
/// heating exceeds one phonon across the whole bracket.
double solve_rho_heating_bound(const IonSpecies& species, double octopole_factor, double max_dc_field,
                               double noise_coefficient);

// Sweeps and optimization.

enum class Scale { Linear, Log };

struct SweepAxis
{
    std::string name;
    double min;
    double max;
    int steps;
    Scale scale = Scale::Linear;

    bool operator==(const SweepAxis&) const = default;
};

struct FieldConstraint
{
    std::string field;
    std::string relation;  // "<=" or ">="
    double bound;

    bool operator==(const FieldConstraint&) const = default;

    bool satisfied(double value) const;
    /// Zero when satisfied, else relative distance from the bound.
    double violation(double value) const;
};

struct SweepSpec
{
    std::vector<SweepAxis> axes;
    std::string objective;
    std::vector<FieldConstraint> constraints;

    bool operator==(const SweepSpec&) const = default;
};

void validate(const SweepSpec& spec);

/// Grid values of one axis. steps == 1 is permitted only for min == max.
std::vector<double> axis_values(const SweepAxis& axis);

struct SweepPoint
{
    std::vector<double> coordinates;
    DerivedDesign design;
    bool feasible;
    double objective;
};

struct SweepResult
{
    std::vector<int> shape;
    std::vector<SweepPoint> points;  // row-major, last axis fastest
    std::optional<std::size_t> argmin;
    std::optional<std::size_t> argmax;
};

/// Feasible means check_constraints passes and every spec constraint holds.
bool point_feasible(const DerivedDesign& d, const std::vector<FieldConstraint>& constraints);

SweepResult sweep(const DesignConfig& base, const SweepSpec& spec);

enum class Goal { Minimize, Maximize };

struct OptimizeSpec
{
    std::vector<SweepAxis> parameters;  // steps is the per-axis grid resolution
    std::string objective;
    Goal goal = Goal::Minimize;
    std::vector<FieldConstraint> constraints;

    bool operator==(const OptimizeSpec&) const = default;
};

struct OptimizeResult
{
    bool found;  // false: no feasible point, `design` is the nearest to feasible
    DerivedDesign design;
    std::vector<double> parameters;
    double objective;
    std::size_t evaluations;
    double total_violation;
};

OptimizeResult optimize(const DesignConfig& base, const OptimizeSpec& spec);

// Improvement scenarios.

struct PipelinedBudget
{
    double scale;
    budget::LogicalBudget logical;
    double recovery_time;  // s
    double n_pbits;
    double n_parallel;
    double n_beams;
    double n_electrodes;
    double total_laser_power;  // W
};

/// Ancilla preparation parallelized by s in [1, 2w].
PipelinedBudget scenario_ancilla_pipelining(const DerivedDesign& d, double scale);

struct RedundantReadout
{
    int copies;
    double measurement_time;  // s
    double p_meas_error;
    budget::LogicalBudget logical;
};

/// Majority-vote readout over k (odd) coupled ions.
RedundantReadout scenario_measurement_redundancy(const DerivedDesign& d, int copies);

/// t_m/k + (k-1) tau_p
double redundant_measurement_time(double measurement_time, double phase_gate_time, int copies);

/// Odd k nearest to sqrt(t_m / tau_p), clamped to >= 1.
int optimal_redundancy(double measurement_time, double phase_gate_time);

inline constexpr double kNoiseRuleValidity = 0.003;
inline constexpr double kNoiseRuleExponent = 2.5;

/// N = N_ref (gamma / gamma_ref)^2.5, valid for gamma < 0.003.
double noise_scaling_rule(double gamma, double gamma_ref, double n_ref);

}  // namespace ionforge::explorer
