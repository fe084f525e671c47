"""Trapped-ion quantum computer resource estimation."""

from ._core import (  # noqa: F401
    DerivedDesign,
    DesignFile,
    InfeasibleError,
    IonSpecies,
    ValidationError,
    check_constraints,
    constants,
    cooling_time,
    crash_probability,
    default_design,
    derive,
    derive_raman,
    heating_rate,
    load_design,
    load_species,
    logical_capacity,
    logical_gate_rate,
    measurement_error,
    measurement_time,
    noise_scaling_rule,
    optimize,
    parse_design,
    physical_gate_time,
    pipelined_logical_rate,
    radial_chain,
    recoil_frequency,
    redundant_measurement_time,
    render_report,
    run_cli,
    saturation_intensity,
    scattering_floor,
    solve_rho_heating_bound,
    split_frequency,
    sweep,
    thermal_gate_error,
)

__version__ = "0.1.0"
