#include "ionforge/explorer.hpp"

#include "ionforge/error.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace ionforge::explorer {

namespace {

bool relation_holds(const std::string& relation, double actual, double bound)
{
    if (relation == "<=")
        return actual <= bound;
    if (relation == ">=")
        return actual >= bound;
    if (relation == "<")
        return actual < bound;
    if (relation == ">")
        return actual > bound;
    throw ValidationError("unknown relation '" + relation + "'", "relation");
}

double relative_violation(const std::string& relation, double actual, double bound)
{
    if (relation_holds(relation, actual, bound))
        return 0.0;
    if (std::isnan(actual))
        return std::numeric_limits<double>::infinity();
    const double scale = bound != 0.0 ? std::abs(bound) : 1.0;
    // strict relations failing at equality still count as violated
    return std::max(std::abs(actual - bound) / scale, 1e-12);
}

}  // namespace

bool ConstraintReport::pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ConstraintEntry& e) { return e.pass; });
}

const ConstraintEntry* ConstraintReport::find(std::string_view name) const
{
    for (const auto& e : entries)
        if (e.name == name)
            return &e;
    return nullptr;
}

ConstraintReport check_constraints(const DerivedDesign& d, const ConstraintBounds& b)
{
    const auto& c = d.config;
    ConstraintReport report;
    auto add = [&](std::string name, std::string relation, double bound, double actual, std::string source) {
        const bool ok = relation_holds(relation, actual, bound);
        report.entries.push_back({std::move(name), std::move(relation), bound, actual, ok, std::move(source)});
    };
    add("split_heating", "<=", b.split_heating, d.thermal.split_heating,
        "phonons gained during split + recombine must not exceed 1");
    add("gate_heating", "<=", b.gate_heating, d.thermal.gate_heating,
        "heating during the phase gate must be small compared to 1");
    add("readout_scatter_fraction", "<=", b.readout_scatter_fraction, c.optics.readout_scatter_fraction,
        "scattered readout light must stay below 1e-5 of the beam power");
    add("max_dc_field", "<=", b.max_dc_field, c.geometry.max_dc_field,
        "d.c. field at the electrodes is kept below the field-emission margin");
    add("gate_zone_clearance", ">=", b.gate_zone_rho_over_lambda,
        c.geometry.ion_electrode_distance * c.geometry.gate_zone_factor / c.species.wavelength,
        "gate-zone electrode distance must greatly exceed the wavelength");
    add("raman_feasibility", ">", d.min_scattering_infidelity, c.optics.scattering_target,
        "scattering target must exceed eta*P0");
    add("gamma1", "<=", b.gamma1, c.encoding.gamma1, "single p-bit gate error ceiling");
    add("gamma_m", "<=", b.gamma_m, c.encoding.gamma_m, "measurement error ceiling");
    return report;
}

double solve_rho_heating_bound(const IonSpecies& species, double octopole_factor, double max_dc_field,
                               double noise_coefficient)
{
    validate(species);
    if (!(octopole_factor > 0.0 && max_dc_field > 0.0 && noise_coefficient >= 0.0))
        throw ValidationError("rho-bound inputs must be positive");
    auto excess = [&](double rho) {
        return trapchip::split_heating(rho, species.mass_number, octopole_factor, max_dc_field, noise_coefficient) -
               1.0;
    };
    double lo = kRhoBracketLow;
    double hi = kRhoBracketHigh;
    if (excess(lo) <= 0.0)
        return lo;
    if (excess(hi) > 0.0)
        throw InfeasibleError("heating bound not reachable in range: split heating exceeds 1 phonon at 1 mm");
    // heating falls monotonically with rho; bisect in log space
    while (hi / lo - 1.0 > 1e-6) {
        const double mid = std::sqrt(lo * hi);
        if (excess(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return std::sqrt(lo * hi);
}

bool FieldConstraint::satisfied(double value) const
{
    return relation_holds(relation, value, bound);
}

double FieldConstraint::violation(double value) const
{
    return relative_violation(relation, value, bound);
}

void validate(const SweepSpec& spec)
{
    if (spec.axes.empty() || spec.axes.size() > 3)
        throw ValidationError("a sweep needs between 1 and 3 axes", "sweep.parameters");
    for (const auto& axis : spec.axes) {
        const ParamInfo* info = find_parameter(axis.name);
        if (!info || info->kind == ParamKind::Text || info->kind == ParamKind::Boolean)
            throw ValidationError("unknown or non-numeric sweep parameter '" + axis.name + "'", axis.name);
        axis_values(axis);
    }
    for (const auto& c : spec.constraints)
        relation_holds(c.relation, 0.0, 0.0);
}

std::vector<double> axis_values(const SweepAxis& a)
{
    if (!(std::isfinite(a.min) && std::isfinite(a.max)))
        throw ValidationError("sweep range of '" + a.name + "' must be finite", a.name);
    if (a.min > a.max)
        throw ValidationError("inverted sweep range for '" + a.name + "'", a.name);
    if (a.min == a.max)
        return {a.min};
    if (a.steps < 2)
        throw ValidationError("sweep axis '" + a.name + "' needs at least 2 steps", a.name);
    if (a.scale == Scale::Log && !(a.min > 0.0))
        throw ValidationError("log sweep of '" + a.name + "' needs a positive range", a.name);

    std::vector<double> v(static_cast<std::size_t>(a.steps));
    const double last = a.steps - 1;
    for (int i = 0; i < a.steps; ++i) {
        const double t = i / last;
        if (a.scale == Scale::Log)
            v[i] = std::exp(std::log(a.min) + t * (std::log(a.max) - std::log(a.min)));
        else
            v[i] = a.min + t * (a.max - a.min);
    }
    v.front() = a.min;
    v.back() = a.max;
    return v;
}

bool point_feasible(const DerivedDesign& d, const std::vector<FieldConstraint>& constraints)
{
    if (!check_constraints(d).pass())
        return false;
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const FieldConstraint& c) { return c.satisfied(field_value(d, c.field)); });
}

namespace {

DesignConfig with_parameters(const DesignConfig& base, const std::vector<SweepAxis>& axes,
                             const std::vector<double>& coords)
{
    DesignConfig cfg = base;
    for (std::size_t i = 0; i < axes.size(); ++i)
        set_parameter(cfg, axes[i].name, coords[i]);
    return cfg;
}

/// Evaluates fn(i) for i in [0, n) on worker threads; results land by index.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn)
{
    std::vector<std::optional<T>> slots(n);
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers)
                slots[i].emplace(fn(i));
        }));
    }
    for (auto& j : jobs)
        j.get();
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

std::vector<std::vector<double>> grid_coordinates(const std::vector<std::vector<double>>& axes)
{
    std::vector<std::vector<double>> coords{{}};
    for (const auto& values : axes) {
        std::vector<std::vector<double>> next;
        next.reserve(coords.size() * values.size());
        for (const auto& prefix : coords)
            for (double v : values) {
                auto c = prefix;
                c.push_back(v);
                next.push_back(std::move(c));
            }
        coords = std::move(next);
    }
    return coords;
}

}  // namespace

SweepResult sweep(const DesignConfig& base, const SweepSpec& spec)
{
    validate(spec);
    std::vector<std::vector<double>> axes;
    SweepResult result;
    for (const auto& a : spec.axes) {
        axes.push_back(axis_values(a));
        result.shape.push_back(static_cast<int>(axes.back().size()));
    }
    const auto coords = grid_coordinates(axes);

    // fail fast on bad field names before spinning up workers
    {
        const DerivedDesign probe = derive(with_parameters(base, spec.axes, coords.front()));
        if (!spec.objective.empty())
            field_value(probe, spec.objective);
        for (const auto& c : spec.constraints)
            field_value(probe, c.field);
    }

    result.points = parallel_map<SweepPoint>(coords.size(), [&](std::size_t i) {
        DerivedDesign d = derive(with_parameters(base, spec.axes, coords[i]));
        const bool feasible = point_feasible(d, spec.constraints);
        const double objective = spec.objective.empty() ? 0.0 : field_value(d, spec.objective);
        return SweepPoint{coords[i], std::move(d), feasible, objective};
    });

    if (!spec.objective.empty()) {
        for (std::size_t i = 0; i < result.points.size(); ++i) {
            const auto& p = result.points[i];
            if (!p.feasible)
                continue;
            if (!result.argmin || p.objective < result.points[*result.argmin].objective)
                result.argmin = i;
            if (!result.argmax || p.objective > result.points[*result.argmax].objective)
                result.argmax = i;
        }
    }
    return result;
}

namespace {

struct Candidate
{
    std::vector<double> coords;
    DerivedDesign design;
    bool feasible;
    double objective;
    double violation;
};

double total_violation(const DerivedDesign& d, const std::vector<FieldConstraint>& constraints)
{
    double v = 0.0;
    for (const auto& e : check_constraints(d).entries)
        v += relative_violation(e.relation, e.actual, e.bound);
    for (const auto& c : constraints)
        v += c.violation(field_value(d, c.field));
    return v;
}

/// Strict "a is better than b".
bool better(const Candidate& a, const Candidate& b, Goal goal)
{
    if (a.feasible != b.feasible)
        return a.feasible;
    if (!a.feasible)
        return a.violation < b.violation;
    return goal == Goal::Minimize ? a.objective < b.objective : a.objective > b.objective;
}

// Local grid size per refinement pass; each pass halves the cell.
constexpr int kRefineSteps = 5;

// Axis coordinate in the space the grid is uniform in.
double to_grid(const SweepAxis& a, double x) { return a.scale == Scale::Log ? std::log(x) : x; }
double from_grid(const SweepAxis& a, double u) { return a.scale == Scale::Log ? std::exp(u) : u; }

}  // namespace

OptimizeResult optimize(const DesignConfig& base, const OptimizeSpec& spec)
{
    if (spec.objective.empty())
        throw ValidationError("optimize needs an objective field", "optimize.objective");
    validate(SweepSpec{spec.parameters, spec.objective, spec.constraints});

    std::vector<SweepAxis> axes = spec.parameters;
    for (auto& a : axes)
        a.steps = std::max(a.steps, 3);

    std::size_t evaluations = 0;
    auto evaluate = [&](const std::vector<std::vector<double>>& coords) {
        evaluations += coords.size();
        return parallel_map<Candidate>(coords.size(), [&](std::size_t i) {
            DerivedDesign d = derive(with_parameters(base, axes, coords[i]));
            const double obj = field_value(d, spec.objective);
            const double viol = total_violation(d, spec.constraints);
            const bool feasible = viol == 0.0;
            return Candidate{coords[i], std::move(d), feasible, obj, viol};
        });
    };
    auto pick = [&](std::vector<Candidate>& cands, std::optional<Candidate>& best) {
        for (auto& c : cands)
            if (!best || better(c, *best, spec.goal))
                best = std::move(c);
    };

    std::vector<std::vector<double>> axis_grid;
    std::vector<double> cell(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
        axis_grid.push_back(axis_values(axes[i]));
        const auto& a = axes[i];
        cell[i] = a.min == a.max ? 0.0 : (to_grid(a, a.max) - to_grid(a, a.min)) / (a.steps - 1);
    }
    std::optional<Candidate> best;
    {
        auto cands = evaluate(grid_coordinates(axis_grid));
        pick(cands, best);
    }

    // Shrink a local grid around the incumbent until cells are 1e-6 of the span.
    for (int pass = 0; pass < 64; ++pass) {
        bool refined = false;
        std::vector<std::vector<double>> local(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) {
            const auto& a = axes[i];
            const double span = to_grid(a, a.max) - to_grid(a, a.min);
            if (cell[i] == 0.0 || cell[i] <= 1e-6 * span) {
                local[i] = {best->coords[i]};
                continue;
            }
            refined = true;
            const double lo = std::max(to_grid(a, best->coords[i]) - cell[i], to_grid(a, a.min));
            const double hi = std::min(to_grid(a, best->coords[i]) + cell[i], to_grid(a, a.max));
            for (int s = 0; s < kRefineSteps; ++s) {
                const double u = lo + (hi - lo) * s / (kRefineSteps - 1);
                local[i].push_back(std::clamp(from_grid(a, u), a.min, a.max));
            }
            cell[i] = (hi - lo) / (kRefineSteps - 1);
        }
        if (!refined)
            break;
        auto cands = evaluate(grid_coordinates(local));
        pick(cands, best);
    }

    return OptimizeResult{
        .found = best->feasible,
        .design = std::move(best->design),
        .parameters = best->coords,
        .objective = best->objective,
        .evaluations = evaluations,
        .total_violation = best->violation,
    };
}

PipelinedBudget scenario_ancilla_pipelining(const DerivedDesign& d, double scale)
{
    const double w = static_cast<double>(d.config.encoding.ancilla_width);
    if (!(scale >= 1.0 && scale <= 2.0 * w))
        throw ValidationError("pipelining scale must lie in [1, 2w]", "scenario.pipelining_scale");
    const double tau_g = d.logical.gate_time;

    PipelinedBudget out{};
    out.scale = scale;
    out.logical = d.logical;
    out.recovery_time = std::max(2.0 * w * tau_g / scale, tau_g);
    out.logical.logical_rate = budget::logical_rate_from_recovery(out.recovery_time, d.readout.measurement_time,
                                                                  d.config.encoding.syndrome_time);
    out.n_pbits = static_cast<double>(d.config.encoding.n_pbits) * scale;
    out.n_parallel = static_cast<double>(d.logical.n_parallel) * scale;
    out.n_beams = 2.0 * static_cast<double>(d.logical.n_parallel) * scale;
    out.n_electrodes = static_cast<double>(d.trap.electrical.n_electrodes) * scale;
    out.total_laser_power = d.raman.total_power * scale;
    return out;
}

double redundant_measurement_time(double measurement_time, double phase_gate_time, int copies)
{
    if (copies < 1 || copies % 2 == 0)
        throw ValidationError("majority vote needs an odd number of copies", "scenario.redundancy");
    return measurement_time / copies + (copies - 1) * phase_gate_time;
}

RedundantReadout scenario_measurement_redundancy(const DerivedDesign& d, int copies)
{
    RedundantReadout out{};
    out.copies = copies;
    out.measurement_time =
        redundant_measurement_time(d.readout.measurement_time, d.config.optics.phase_gate_time, copies);
    out.p_meas_error = d.readout.p_meas_error;
    out.logical = d.logical;
    out.logical.logical_rate = budget::logical_gate_rate(d.config.encoding.ancilla_width, d.logical.gate_time,
                                                         out.measurement_time, d.config.encoding.syndrome_time);
    return out;
}

int optimal_redundancy(double measurement_time, double phase_gate_time)
{
    if (!(measurement_time > 0.0 && phase_gate_time > 0.0))
        throw ValidationError("measurement and gate times must be > 0");
    const double k = std::sqrt(measurement_time / phase_gate_time);
    const int half = static_cast<int>(std::lround((k - 1.0) / 2.0));
    return std::max(1, 2 * half + 1);
}

double noise_scaling_rule(double gamma, double gamma_ref, double n_ref)
{
    if (!(gamma > 0.0 && gamma_ref > 0.0 && n_ref > 0.0))
        throw ValidationError("noise scaling inputs must be positive", "scenario.noise_gamma");
    if (gamma >= kNoiseRuleValidity || gamma_ref >= kNoiseRuleValidity)
        throw ValidationError("outside rule-of-thumb validity (gamma < 0.003)", "scenario.noise_gamma");
    if (gamma == gamma_ref)
        return n_ref;
    return n_ref * std::pow(gamma / gamma_ref, kNoiseRuleExponent);
}

}  // namespace ionforge::explorer
