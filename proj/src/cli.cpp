#include "ionforge/cli.hpp"

#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"
#include "ionforge/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace ionforge::cli {

namespace {

struct Options
{
    std::string design_path;
    std::string format = "human";
    std::string out_path;
    std::vector<std::string> overrides;
    std::string species;

    // sweep / optimize
    std::vector<std::string> params;
    std::string objective;
    std::vector<std::string> constraints;
    std::string goal;

    // scenario
    std::optional<double> pipelining;
    std::optional<int> redundancy;
    std::optional<double> noise_gamma;
};

double parse_double(const std::string& s, const std::string& what)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ValidationError("cannot parse '" + s + "' as a number in " + what, what);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return parts;
}

// name:min:max:steps[:linear|log]
explorer::SweepAxis parse_axis(const std::string& spec)
{
    const auto p = split(spec, ':');
    if (p.size() < 4 || p.size() > 5)
        throw ValidationError("--param expects name:min:max:steps[:linear|log], got '" + spec + "'", "--param");
    explorer::SweepAxis a;
    a.name = p[0];
    a.min = parse_double(p[1], "--param");
    a.max = parse_double(p[2], "--param");
    const double steps = parse_double(p[3], "--param");
    if (steps != static_cast<int>(steps))
        throw ValidationError("--param steps must be an integer", "--param");
    a.steps = static_cast<int>(steps);
    if (p.size() == 5) {
        if (p[4] == "log")
            a.scale = explorer::Scale::Log;
        else if (p[4] != "linear")
            throw ValidationError("--param scale must be linear or log", "--param");
    }
    return a;
}

// field<=bound, field>=bound, field<bound, field>bound
explorer::FieldConstraint parse_constraint(const std::string& spec)
{
    for (const char* rel : {"<=", ">=", "<", ">"}) {
        const auto pos = spec.find(rel);
        if (pos == std::string::npos || pos == 0)
            continue;
        const std::string r = rel;
        return {spec.substr(0, pos), r, parse_double(spec.substr(pos + r.size()), "--constraint")};
    }
    throw ValidationError("--constraint expects field<=bound or field>=bound, got '" + spec + "'", "--constraint");
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f)
        throw ValidationError("cannot write '" + o.out_path + "'", "--out");
    f << text;
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message, const std::string& key = {},
                  int line = 0)
{
    nlohmann::ordered_json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    if (!key.empty())
        j["error"]["key"] = key;
    if (line > 0)
        j["error"]["line"] = line;
    err << j.dump() << "\n";
}

DesignFile load(const Options& o)
{
    DesignFile file = load_design(o.design_path);
    if (!o.species.empty())
        set_species(file.config, o.species);
    for (const auto& ov : o.overrides)
        apply_override(file.config, ov);
    return file;
}

int run_derive(const Options& o, std::ostream& out, std::ostream& err, bool with_scenarios)
{
    DesignFile file = load(o);
    if (with_scenarios) {
        if (o.pipelining)
            file.scenario.pipelining_scale = o.pipelining;
        if (o.redundancy)
            file.scenario.redundancy = o.redundancy;
        if (o.noise_gamma)
            file.scenario.noise_gamma = o.noise_gamma;
        if (file.scenario.empty())
            throw ValidationError("no scenario requested (use the scenario section or --pipelining/--redundancy/"
                                  "--noise-gamma)",
                                  "scenario");
    }
    const DerivedDesign d = derive(file.config);
    if (!d.raman_feasible) {
        error_record(err, "infeasible",
                     "scattering target is unreachable: epsilon_s must exceed eta*P0 = " +
                         std::to_string(d.min_scattering_infidelity),
                     "optics.epsilon_s");
        return kInfeasible;
    }
    const auto constraints = explorer::check_constraints(d);
    const auto report = report::build_report(d, constraints, with_scenarios ? file.scenario : ScenarioSpec{});
    emit(o, report::render_report(report, report::format_from_string(o.format)), out);
    return kSuccess;
}

int run_check(const Options& o, std::ostream& out)
{
    const DesignFile file = load(o);
    const auto constraints = explorer::check_constraints(derive(file.config));
    emit(o, report::render_constraints(constraints, report::format_from_string(o.format)), out);
    return constraints.pass() ? kSuccess : kInfeasible;
}

int run_sweep(const Options& o, std::ostream& out)
{
    const DesignFile file = load(o);
    explorer::SweepSpec spec = file.sweep.value_or(explorer::SweepSpec{});
    if (!o.params.empty()) {
        spec.axes.clear();
        for (const auto& p : o.params)
            spec.axes.push_back(parse_axis(p));
    }
    if (!o.objective.empty())
        spec.objective = o.objective;
    for (const auto& c : o.constraints)
        spec.constraints.push_back(parse_constraint(c));
    if (spec.axes.empty())
        throw ValidationError("no sweep axes (use the sweep section or --param)", "sweep.parameters");
    const auto format = report::format_from_string(o.format);
    const auto result = explorer::sweep(file.config, spec);
    emit(o, report::render_sweep(result, spec, format), out);
    return kSuccess;
}

int run_optimize(const Options& o, std::ostream& out)
{
    const DesignFile file = load(o);
    explorer::OptimizeSpec spec = file.optimize.value_or(explorer::OptimizeSpec{});
    if (!o.params.empty()) {
        spec.parameters.clear();
        for (const auto& p : o.params)
            spec.parameters.push_back(parse_axis(p));
    }
    if (!o.objective.empty())
        spec.objective = o.objective;
    if (o.goal == "maximize")
        spec.goal = explorer::Goal::Maximize;
    else if (o.goal == "minimize")
        spec.goal = explorer::Goal::Minimize;
    else if (!o.goal.empty())
        throw ValidationError("--goal must be minimize or maximize", "--goal");
    for (const auto& c : o.constraints)
        spec.constraints.push_back(parse_constraint(c));
    if (spec.parameters.empty())
        throw ValidationError("no free parameters (use the optimize section or --param)", "optimize.parameters");
    const auto format = report::format_from_string(o.format);
    const auto result = explorer::optimize(file.config, spec);
    emit(o, report::render_optimize(result, spec, format), out);
    return result.found ? kSuccess : kInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"ion-forge: trapped-ion quantum computer resource estimator"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("design", o.design_path, "design file (YAML)")->required();
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--out", o.out_path, "write the report to this path");
        sub->add_option("--override", o.overrides, "key=value applied on top of the file");
        sub->add_option("--species", o.species, "replace the species by a registry entry");
    };
    auto* derive_cmd = app.add_subcommand("derive", "derive the logical and physical parameter tables");
    auto* check_cmd = app.add_subcommand("check", "evaluate feasibility constraints");
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid");
    auto* optimize_cmd = app.add_subcommand("optimize", "grid search with local refinement");
    auto* scenario_cmd = app.add_subcommand("scenario", "report with improvement scenarios");
    for (auto* sub : {derive_cmd, check_cmd, sweep_cmd, optimize_cmd, scenario_cmd})
        common(sub);
    for (auto* sub : {sweep_cmd, optimize_cmd}) {
        sub->add_option("--param", o.params, "name:min:max:steps[:linear|log]");
        sub->add_option("--objective", o.objective, "output field");
        sub->add_option("--constraint", o.constraints, "field<=bound or field>=bound");
    }
    optimize_cmd->add_option("--goal", o.goal, "minimize or maximize");
    scenario_cmd->add_option("--pipelining", o.pipelining, "ancilla pipelining scale s in [1, 2w]");
    scenario_cmd->add_option("--redundancy", o.redundancy, "odd number of ions per measurement");
    scenario_cmd->add_option("--noise-gamma", o.noise_gamma, "physical error for the N ~ gamma^2.5 rule");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        error_record(err, "usage", e.what());
        return kValidationError;
    }

    try {
        if (derive_cmd->parsed())
            return run_derive(o, out, err, false);
        if (scenario_cmd->parsed())
            return run_derive(o, out, err, true);
        if (check_cmd->parsed())
            return run_check(o, out);
        if (sweep_cmd->parsed())
            return run_sweep(o, out);
        if (optimize_cmd->parsed())
            return run_optimize(o, out);
    } catch (const ParseError& e) {
        error_record(err, "parse", e.what(), e.key(), e.line());
        return kValidationError;
    } catch (const ValidationError& e) {
        error_record(err, "validation", e.what(), e.key());
        return kValidationError;
    } catch (const InfeasibleError& e) {
        error_record(err, "infeasible", e.what());
        return kInfeasible;
    } catch (const std::exception& e) {
        error_record(err, "internal", e.what());
        return kInternalError;
    }
    return kInternalError;
}

}  // namespace ionforge::cli
