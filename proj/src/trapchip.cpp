#include "ionforge/trapchip.hpp"

#include "ionforge/error.hpp"

#include <cmath>
#include <numbers>

namespace ionforge::trapchip {

using std::numbers::pi;

namespace {

void require_positive(double v, const char* key)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ValidationError(std::string(key) + " must be > 0", key);
}

// Reference design point the anchors refer to.
constexpr double kRefMassNumber = 111;
constexpr double kRefRho = 10e-6;
constexpr long long kRefPbits = 6444;

}  // namespace

void validate(const TrapGeometry& g)
{
    require_positive(g.ion_electrode_distance, "geometry.rho");
    if (!(g.gate_zone_factor >= 1.0))
        throw ValidationError("gate zone factor must be >= 1", "geometry.gate_zone_factor");
    if (!(g.octopole_factor > 0.0 && g.octopole_factor < 1.0))
        throw ValidationError("octopole factor must lie in (0, 1)", "geometry.mu8");
    if (!(g.quadrupole_factor > 0.0 && g.quadrupole_factor < 1.0))
        throw ValidationError("quadrupole factor must lie in (0, 1)", "geometry.mu4");
    require_positive(g.max_dc_field, "geometry.e_max");
    require_positive(g.rf_field, "geometry.e_rf");
    if (!(g.mathieu_q > 0.0 && g.mathieu_q < 0.9))
        throw ValidationError("Mathieu q must lie in (0, 0.9)", "geometry.q_r");
    require_positive(g.loss_tangent, "geometry.loss_tangent");
}

void validate(const HeatingModel& h)
{
    if (!(h.noise_coefficient >= 0.0) || !std::isfinite(h.noise_coefficient))
        throw ValidationError("noise coefficient must be >= 0", "geometry.a");
    require_positive(h.mean_vibration_target, "encoding.nbar");
}

bool noise_coefficient_out_of_band(double a)
{
    return a < kNoiseCoefficientLow || a > kNoiseCoefficientHigh;
}

double split_frequency(double mass_number, double octopole_factor, double max_dc_field, double rho)
{
    require_positive(mass_number, "species.mass_number");
    require_positive(octopole_factor, "geometry.mu8");
    require_positive(max_dc_field, "geometry.e_max");
    require_positive(rho, "geometry.rho");
    return 840.0 / (2.0 * pi * std::sqrt(mass_number)) *
           std::pow(octopole_factor * max_dc_field / (rho * rho * rho), 0.3);
}

RadialChain radial_chain(double mass_number, double mathieu_q, double quadrupole_factor, double rf_field,
                         double rho)
{
    require_positive(mass_number, "species.mass_number");
    require_positive(mathieu_q, "geometry.q_r");
    require_positive(quadrupole_factor, "geometry.mu4");
    require_positive(rf_field, "geometry.e_rf");
    require_positive(rho, "geometry.rho");
    const auto k = constants();
    RadialChain out{};
    out.secular_frequency = 1.0 / (2.0 * pi) *
                            std::sqrt(mathieu_q * k.elementary_charge / (2.0 * mass_number * k.atomic_mass_unit) *
                                      quadrupole_factor * rf_field / rho);
    out.rf_drive = 2.0 * pi * (2.0 * std::numbers::sqrt2 * out.secular_frequency / mathieu_q);
    out.v_rms = quadrupole_factor * rho * rf_field / std::numbers::sqrt2;
    return out;
}

ChipElectrical electrical_architecture(long long n_pbits, long long n_parallel, double rho, double loss_tangent,
                                       double v_rms, double rf_drive)
{
    if (n_pbits < 1)
        throw ValidationError("number of p-bits must be >= 1", "encoding.n_pbits");
    if (n_parallel < 1)
        throw ValidationError("number of parallel operations must be >= 1", "encoding.n_parallel");
    require_positive(rho, "geometry.rho");
    require_positive(loss_tangent, "geometry.loss_tangent");

    const double n = static_cast<double>(n_pbits);
    ChipElectrical out{};
    out.area = 50.0 * n * rho * rho;
    out.n_electrodes = 30 * n_parallel + 20 * n_pbits;
    out.electrode_density = static_cast<double>(out.n_electrodes) / out.area;
    out.capacitance_per_pbit = 20.0 * rho * constants().vacuum_permittivity;
    out.v_rms = v_rms;
    out.rf_drive = rf_drive;
    out.rf_power = n * v_rms * v_rms * rf_drive * out.capacitance_per_pbit * loss_tangent;
    return out;
}

double heating_rate(double rho_effective, double noise_coefficient, double mode_frequency, double mass)
{
    require_positive(rho_effective, "geometry.rho");
    require_positive(mode_frequency, "mode frequency");
    require_positive(mass, "mass");
    if (!(noise_coefficient >= 0.0))
        throw ValidationError("noise coefficient must be >= 0", "geometry.a");
    const auto k = constants();
    const double spectral_density = noise_coefficient / std::pow(rho_effective, kHeatingExponent);
    return k.elementary_charge * k.elementary_charge * spectral_density /
           (4.0 * mass * k.planck_h * mode_frequency);
}

double thermal_gate_error(double lamb_dicke, double n)
{
    if (!(lamb_dicke > 0.0 && lamb_dicke < 1.0))
        throw ValidationError("Lamb-Dicke parameter must lie in (0, 1)", "eta");
    if (!(n >= 0.0))
        throw ValidationError("mean vibration number must be >= 0", "encoding.nbar");
    return 0.3 * pi * pi * std::pow(lamb_dicke, 4) * n * (n + 1.0);
}

double cooling_time(double n, double com_frequency)
{
    if (!(n > 0.0))
        throw ValidationError("mean vibration target must be > 0 (zero implies unbounded cooling time)",
                              "encoding.nbar");
    require_positive(com_frequency, "nu_com");
    return 1.0 / (n * com_frequency);
}

double heating_during(double duration, double rate)
{
    if (!(duration >= 0.0 && rate >= 0.0))
        throw ValidationError("duration and heating rate must be >= 0");
    return duration * rate;
}

double split_heating(double rho, double mass_number, double octopole_factor, double max_dc_field,
                     double noise_coefficient)
{
    const double nu = split_frequency(mass_number, octopole_factor, max_dc_field, rho);
    const double mass = mass_number * constants().atomic_mass_unit;
    return heating_during(2.0 / nu, heating_rate(rho, noise_coefficient, nu, mass));
}

double split_frequency_anchor_ratio()
{
    static const double ratio = kTabulatedSplitFrequency / split_frequency(kRefMassNumber, 0.02, 2e8, kRefRho);
    return ratio;
}

double rf_power_anchor_ratio()
{
    static const double ratio = [] {
        const RadialChain radial = radial_chain(kRefMassNumber, 0.3, 0.15, 1e8, kRefRho);
        const ChipElectrical chip =
            electrical_architecture(kRefPbits, 990, kRefRho, 5e-4, radial.v_rms, radial.rf_drive);
        return kTabulatedRfPower / chip.rf_power;
    }();
    return ratio;
}

}  // namespace ionforge::trapchip
