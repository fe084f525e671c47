#include "ionforge/optics.hpp"

#include "ionforge/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ionforge::optics {

using std::numbers::pi;

void validate(const ReadoutConfig& c)
{
    if (!(c.collection_efficiency > 0.0 && c.collection_efficiency <= 1.0))
        throw ValidationError("collection efficiency must lie in (0, 1]", "optics.collection_efficiency");
    if (!(c.mean_counts >= 0.0) || !std::isfinite(c.mean_counts))
        throw ValidationError("mean counts must be >= 0", "optics.mean_counts");
    if (c.count_threshold < 1)
        throw ValidationError("count threshold must be >= 1", "optics.count_threshold");
    if (!(c.beam_radius > 0.0))
        throw ValidationError("beam radius must be > 0", "optics.beam_radius");
    if (!(c.scatter_fraction >= 0.0 && c.scatter_fraction < 1.0))
        throw ValidationError("readout scatter fraction must lie in [0, 1)", "optics.readout_scatter_fraction");
}

void validate(const RamanConfig& c)
{
    if (!(c.phase_gate_time > 0.0) || !std::isfinite(c.phase_gate_time))
        throw ValidationError("phase gate time must be > 0", "optics.tau_p");
    if (!(c.scattering_target > 0.0 && c.scattering_target < 1.0))
        throw ValidationError("scattering infidelity target must lie in (0, 1)", "optics.epsilon_s");
    if (!(c.beam_radius > 0.0))
        throw ValidationError("beam radius must be > 0", "optics.beam_radius");
    if (c.n_parallel < 1)
        throw ValidationError("number of parallel operations must be >= 1", "encoding.n_parallel");
}

double saturation_intensity(const IonSpecies& s)
{
    const auto k = constants();
    return 4.0 * pi * pi * s.linewidth * k.hbar * k.speed_of_light / (3.0 * std::pow(s.wavelength, 3));
}

double recoil_frequency(const IonSpecies& s)
{
    const auto k = constants();
    return k.planck_h / (2.0 * s.mass_number * k.atomic_mass_unit * s.wavelength * s.wavelength);
}

double measurement_error(double mean_counts, int threshold)
{
    if (threshold < 1)
        throw ValidationError("count threshold must be >= 1", "optics.count_threshold");
    // sum_{j < threshold} c^j e^-c / j!
    double term = std::exp(-mean_counts);
    double sum = term;
    for (int j = 1; j < threshold; ++j) {
        term *= mean_counts / j;
        sum += term;
    }
    return std::min(sum, 1.0);
}

double measurement_time(double mean_counts, double collection_efficiency, const IonSpecies& s)
{
    // 4: excited-state fraction of a saturated ion taken as 1/4
    return 4.0 * mean_counts / (collection_efficiency * s.linewidth);
}

ReadoutDerived readout_budget(const IonSpecies& s, const ReadoutConfig& cfg)
{
    validate(cfg);
    const auto k = constants();
    ReadoutDerived out{};
    out.measurement_time = measurement_time(cfg.mean_counts, cfg.collection_efficiency, s);
    out.p_meas_error = measurement_error(cfg.mean_counts, cfg.count_threshold);
    out.fluorescence_power = s.linewidth * k.planck_h * k.speed_of_light / (2.0 * s.wavelength);
    out.readout_beam_power = pi * cfg.beam_radius * cfg.beam_radius * saturation_intensity(s);
    out.max_scatter_fraction = kMaxReadoutScatterFraction;
    out.background_ratio = cfg.scatter_fraction * out.readout_beam_power / out.fluorescence_power;
    return out;
}

double scattering_floor(const IonSpecies& s)
{
    if (!(s.fine_structure > 0.0))
        throw ValidationError("fine structure must be > 0", "species.fine_structure");
    return 2.0 * std::numbers::sqrt2 * pi * s.linewidth / s.fine_structure;
}

double minimum_scattering_infidelity(double lamb_dicke, double floor)
{
    return lamb_dicke * floor;
}

RamanDerived derive_raman_unchecked(const IonSpecies& s, const RamanConfig& cfg)
{
    validate(cfg);
    RamanDerived r{};
    r.stretch_frequency = 4.0 / cfg.phase_gate_time;
    r.com_frequency = r.stretch_frequency / std::sqrt(3.0);
    r.recoil_frequency = recoil_frequency(s);
    r.lamb_dicke = std::sqrt(r.recoil_frequency / r.stretch_frequency);
    r.rabi_frequency = pi / (r.lamb_dicke * cfg.phase_gate_time);
    r.saturation_intensity = saturation_intensity(s);
    r.scattering_floor = scattering_floor(s);
    r.intensity_at_floor = 6.0 * s.fine_structure * (3.0 * std::numbers::sqrt2 - 4.0) * r.rabi_frequency *
                           r.saturation_intensity / (s.linewidth * s.linewidth);

    const double eta = r.lamb_dicke;
    const double margin = eta * cfg.scattering_target - eta * eta * r.scattering_floor;
    if (margin > 0.0) {
        r.intensity = r.intensity_at_floor * r.scattering_floor / margin;
        r.beam_power = pi * cfg.beam_radius * cfg.beam_radius * r.intensity;
        r.total_power = 2.0 * static_cast<double>(cfg.n_parallel) * r.beam_power;
    } else {
        r.intensity = std::numeric_limits<double>::infinity();
        r.beam_power = r.intensity;
        r.total_power = r.intensity;
    }
    return r;
}

RamanDerived derive_raman(const IonSpecies& s, const RamanConfig& cfg)
{
    RamanDerived r = derive_raman_unchecked(s, cfg);
    if (!std::isfinite(r.intensity)) {
        throw InfeasibleError("scattering target " + std::to_string(cfg.scattering_target) +
                              " is unreachable; minimum achievable is eta*P0 = " +
                              std::to_string(minimum_scattering_infidelity(r.lamb_dicke, r.scattering_floor)));
    }
    return r;
}

double scattering_infidelity(double intensity, const RamanDerived& d)
{
    if (!(intensity > 0.0))
        throw ValidationError("intensity must be > 0", "intensity");
    return (d.intensity_at_floor / intensity + d.lamb_dicke * d.lamb_dicke) * d.scattering_floor / d.lamb_dicke;
}

double gate_time_scaling(const GateTimeReference& ref, double intensity, double wavelength,
                         double scattering_target, double mass)
{
    if (!(intensity > 0.0 && wavelength > 0.0 && scattering_target > 0.0 && mass > 0.0))
        throw ValidationError("gate-time scaling inputs must be positive");
    const double before = ref.intensity * ref.wavelength * ref.scattering_target / ref.mass;
    const double after = intensity * wavelength * scattering_target / mass;
    return ref.phase_gate_time * std::sqrt(before / after);
}

}  // namespace ionforge::optics
