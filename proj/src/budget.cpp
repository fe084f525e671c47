#include "ionforge/budget.hpp"

#include "ionforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ionforge::budget {

void validate(const EncodingParams& p)
{
    const auto& c = p.code;
    if (c.n < 1 || c.k < 1 || c.d < 1)
        throw ValidationError("code parameters must be >= 1", "encoding.n");
    if (c.d % 2 == 0)
        throw ValidationError("code distance must be odd", "encoding.d");
    if (c.k > c.n)
        throw ValidationError("code must satisfy k <= n", "encoding.k");
    if (p.n_pbits < 4 * c.n + c.k)
        throw ValidationError("insufficient p-bits for one block (need N >= 4n+k)", "encoding.n_pbits");
    if (p.ancilla_size < 1)
        throw ValidationError("ancilla size must be >= 1", "encoding.ancilla_size");
    if (p.ancilla_width < 1)
        throw ValidationError("ancilla width must be >= 1", "encoding.ancilla_width");
    if (!(p.syndrome_time >= 0.0) || !std::isfinite(p.syndrome_time))
        throw ValidationError("syndrome processing time must be >= 0", "encoding.t_sp");
    if (!(p.memory_quality > 0.0))
        throw ValidationError("memory quality must be > 0", "encoding.q");
    if (!(p.gamma1 >= 0.0 && p.gamma1 < 1.0))
        throw ValidationError("gamma1 must lie in [0, 1)", "encoding.gamma1");
    if (!(p.gamma_m >= 0.0 && p.gamma_m < 1.0))
        throw ValidationError("gamma_m must lie in [0, 1)", "encoding.gamma_m");
}

EncodingDerived encoding_derived(const EncodingParams& p)
{
    validate(p);
    EncodingDerived out{};
    out.bits_per_block = 4 * p.code.n + p.code.k;
    out.blocks = p.n_pbits / out.bits_per_block;
    out.n_parallel = 2 * out.blocks * p.ancilla_size / p.ancilla_width;
    out.parallel_measurements = out.blocks * p.code.n;
    return out;
}

long long physical_qubit_ions(long long n_pbits)
{
    return 2 * n_pbits;
}

double physical_gate_time(double split_frequency, double radial_frequency, double cooling_time,
                          double phase_gate_time)
{
    if (!(split_frequency > 0.0 && radial_frequency > 0.0 && cooling_time >= 0.0 && phase_gate_time > 0.0))
        throw ValidationError("gate-time stages must be positive");
    return 2.0 / split_frequency + 10.0 / radial_frequency + cooling_time + phase_gate_time;
}

double logical_rate_from_recovery(double recovery_time, double measurement_time, double syndrome_time)
{
    return 1.0 / (recovery_time + 2.0 * measurement_time + syndrome_time);
}

double logical_gate_rate(long long ancilla_width, double gate_time, double measurement_time,
                         double syndrome_time)
{
    if (ancilla_width < 1 || !(gate_time > 0.0) || !(measurement_time > 0.0) || !(syndrome_time >= 0.0))
        throw ValidationError("logical gate rate inputs must be positive");
    return logical_rate_from_recovery(2.0 * static_cast<double>(ancilla_width) * gate_time, measurement_time,
                                      syndrome_time);
}

double gate_error_budget(double scattering_infidelity, double thermal_error)
{
    if (!(scattering_infidelity >= 0.0 && scattering_infidelity < 1.0 && thermal_error >= 0.0 &&
          thermal_error < 1.0))
        throw ValidationError("gate error contributions must lie in [0, 1)");
    return std::min(scattering_infidelity + thermal_error, std::nextafter(1.0, 0.0));
}

double crash_probability(double gamma2, const CrashModel& model)
{
    if (!(gamma2 >= 0.0))
        throw ValidationError("gamma2 must be >= 0", "gamma2");
    if (!(model.anchor_gamma2 > 0.0 && model.anchor_probability > 0.0))
        throw ValidationError("crash anchors must be > 0", "overrides.crash_anchor_gamma2");
    const double ratio = gamma2 / model.anchor_gamma2;
    // repeated products keep the law exactly homogeneous under doubling
    double power = 1.0;
    for (int i = 0; i < kCrashExponent; ++i)
        power *= ratio;
    return std::min(model.anchor_probability * power, 1.0);
}

double logical_capacity(long long blocks, double p)
{
    if (blocks < 1)
        throw ValidationError("number of blocks must be >= 1", "blocks");
    if (!(p >= 0.0))
        throw ValidationError("crash probability must be >= 0", "crash_probability");
    if (p == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / (static_cast<double>(blocks) * p);
}

double memory_error(double memory_quality)
{
    if (!(memory_quality > 0.0))
        throw ValidationError("memory quality must be > 0", "encoding.q");
    return 1.0 / memory_quality;
}

}  // namespace ionforge::budget
