#include "ionforge/design_file.hpp"

#include "ionforge/error.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ionforge {

namespace {

int line_of(const YAML::Node& n)
{
    return n.Mark().is_null() ? 0 : n.Mark().line + 1;
}

[[noreturn]] void fail(const std::string& what, const std::string& key, const YAML::Node& at)
{
    const int line = line_of(at);
    throw ParseError(what + (line > 0 ? " (line " + std::to_string(line) + ")" : ""), key, line);
}

double parse_number(const YAML::Node& n, const std::string& key)
{
    if (!n.IsScalar())
        fail("expected a number for '" + key + "'", key, n);
    const std::string& s = n.Scalar();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        fail("cannot parse '" + s + "' as a number for '" + key + "'", key, n);
    return v;
}

bool parse_bool(const YAML::Node& n, const std::string& key)
{
    if (n.IsScalar()) {
        if (n.Scalar() == "true")
            return true;
        if (n.Scalar() == "false")
            return false;
    }
    fail("expected true or false for '" + key + "'", key, n);
}

std::string parse_text(const YAML::Node& n, const std::string& key)
{
    if (!n.IsScalar())
        fail("expected a string for '" + key + "'", key, n);
    return n.Scalar();
}

void require_map(const YAML::Node& n, const std::string& key)
{
    if (!n.IsMap())
        fail("section '" + key + "' must be a mapping", key, n);
}

/// Rejects keys of `section` not listed in `allowed`.
void check_keys(const YAML::Node& section, const std::string& prefix, const std::set<std::string>& allowed)
{
    for (const auto& kv : section) {
        const std::string k = kv.first.as<std::string>();
        if (!allowed.contains(k))
            fail("unknown key '" + prefix + k + "'", prefix + k, kv.first);
    }
}

/// Sets a registry parameter from a scalar node, wrapping range errors with the line.
void set_from_node(DesignConfig& cfg, const std::string& key, const YAML::Node& n)
{
    const ParamInfo* info = find_parameter(key);
    try {
        if (info->kind == ParamKind::Boolean)
            set_parameter(cfg, key, parse_bool(n, key) ? 1.0 : 0.0);
        else
            set_parameter(cfg, key, parse_number(n, key));
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(e.what(), key, n);
    }
}

struct SectionSpec
{
    const char* name;
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::array<SectionSpec, 4>& numeric_sections()
{
    static const std::array<SectionSpec, 4> s{{
        {"geometry",
         {"rho", "gate_zone_factor", "mu4", "mu8", "e_max", "e_rf", "q_r", "loss_tangent", "a"},
         {}},
        {"optics",
         {"collection_efficiency", "mean_counts", "beam_radius", "tau_p", "epsilon_s"},
         {"count_threshold", "readout_scatter_fraction"}},
        {"encoding",
         {"n_pbits", "n", "k", "d", "ancilla_size", "ancilla_width", "t_sp", "q", "gamma1", "gamma_m", "nbar"},
         {}},
        {"overrides",
         {},
         {"use_anchored_split_frequency", "split_frequency", "gate_heating_rate", "crash_anchor_gamma2",
          "crash_anchor_probability"}},
    }};
    return s;
}

void parse_species(const YAML::Node& n, DesignConfig& cfg)
{
    require_map(n, "species");
    check_keys(n, "species.", {"name", "linewidth", "wavelength", "mass_number", "fine_structure", "provenance"});
    if (!n["name"])
        fail("missing required key 'species.name'", "species.name", n);
    const std::string name = parse_text(n["name"], "species.name");

    const std::array<const char*, 4> record{"linewidth", "wavelength", "mass_number", "fine_structure"};
    std::size_t present = 0;
    for (const char* k : record)
        present += n[k] ? 1 : 0;

    if (present == 0) {
        if (n["provenance"])
            fail("'species.provenance' only applies to a full species record", "species.provenance", n["provenance"]);
        try {
            set_species(cfg, name);
        } catch (const ValidationError& e) {
            fail(e.what(), "species.name", n["name"]);
        }
        return;
    }
    for (const char* k : record)
        if (!n[k])
            fail(std::string("missing required key 'species.") + k + "'", std::string("species.") + k, n);

    IonSpecies s;
    s.name = name;
    s.linewidth = parse_number(n["linewidth"], "species.linewidth");
    s.wavelength = parse_number(n["wavelength"], "species.wavelength");
    s.mass_number = parse_number(n["mass_number"], "species.mass_number");
    s.fine_structure = parse_number(n["fine_structure"], "species.fine_structure");
    s.data_provenance = DataProvenance::User;
    try {
        if (n["provenance"])
            s.data_provenance = data_provenance_from_string(parse_text(n["provenance"], "species.provenance"));
        cfg.species = load_species(s);
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(e.what(), e.key(), n);
    }
    cfg.species_ref.clear();
}

explorer::Scale parse_scale(const YAML::Node& n, const std::string& key)
{
    const std::string s = parse_text(n, key);
    if (s == "linear")
        return explorer::Scale::Linear;
    if (s == "log")
        return explorer::Scale::Log;
    fail("scale must be 'linear' or 'log'", key, n);
}

std::vector<explorer::SweepAxis> parse_axes(const YAML::Node& n, const std::string& prefix)
{
    if (!n.IsSequence())
        fail("'" + prefix + "' must be a list", prefix, n);
    std::vector<explorer::SweepAxis> axes;
    for (const auto& item : n) {
        require_map(item, prefix);
        check_keys(item, prefix + ".", {"name", "min", "max", "steps", "scale"});
        for (const char* k : {"name", "min", "max", "steps"})
            if (!item[k])
                fail("missing required key '" + prefix + "." + k + "'", prefix + "." + k, item);
        explorer::SweepAxis a;
        a.name = parse_text(item["name"], prefix + ".name");
        a.min = parse_number(item["min"], prefix + ".min");
        a.max = parse_number(item["max"], prefix + ".max");
        const double steps = parse_number(item["steps"], prefix + ".steps");
        if (steps != static_cast<int>(steps))
            fail("steps must be an integer", prefix + ".steps", item["steps"]);
        a.steps = static_cast<int>(steps);
        if (item["scale"])
            a.scale = parse_scale(item["scale"], prefix + ".scale");
        axes.push_back(std::move(a));
    }
    return axes;
}

std::vector<explorer::FieldConstraint> parse_constraints(const YAML::Node& n, const std::string& prefix)
{
    if (!n.IsSequence())
        fail("'" + prefix + "' must be a list", prefix, n);
    std::vector<explorer::FieldConstraint> out;
    for (const auto& item : n) {
        require_map(item, prefix);
        check_keys(item, prefix + ".", {"field", "relation", "bound"});
        for (const char* k : {"field", "relation", "bound"})
            if (!item[k])
                fail("missing required key '" + prefix + "." + k + "'", prefix + "." + k, item);
        explorer::FieldConstraint c;
        c.field = parse_text(item["field"], prefix + ".field");
        c.relation = parse_text(item["relation"], prefix + ".relation");
        if (c.relation != "<=" && c.relation != ">=" && c.relation != "<" && c.relation != ">")
            fail("relation must be one of <=, >=, <, >", prefix + ".relation", item["relation"]);
        c.bound = parse_number(item["bound"], prefix + ".bound");
        out.push_back(std::move(c));
    }
    return out;
}

explorer::SweepSpec parse_sweep(const YAML::Node& n)
{
    require_map(n, "sweep");
    check_keys(n, "sweep.", {"objective", "parameters", "constraints"});
    if (!n["parameters"])
        fail("missing required key 'sweep.parameters'", "sweep.parameters", n);
    explorer::SweepSpec s;
    s.axes = parse_axes(n["parameters"], "sweep.parameters");
    if (n["objective"])
        s.objective = parse_text(n["objective"], "sweep.objective");
    if (n["constraints"])
        s.constraints = parse_constraints(n["constraints"], "sweep.constraints");
    return s;
}

explorer::OptimizeSpec parse_optimize(const YAML::Node& n)
{
    require_map(n, "optimize");
    check_keys(n, "optimize.", {"objective", "goal", "parameters", "constraints"});
    for (const char* k : {"objective", "parameters"})
        if (!n[k])
            fail(std::string("missing required key 'optimize.") + k + "'", std::string("optimize.") + k, n);
    explorer::OptimizeSpec s;
    s.objective = parse_text(n["objective"], "optimize.objective");
    s.parameters = parse_axes(n["parameters"], "optimize.parameters");
    if (n["goal"]) {
        const std::string g = parse_text(n["goal"], "optimize.goal");
        if (g == "minimize")
            s.goal = explorer::Goal::Minimize;
        else if (g == "maximize")
            s.goal = explorer::Goal::Maximize;
        else
            fail("goal must be 'minimize' or 'maximize'", "optimize.goal", n["goal"]);
    }
    if (n["constraints"])
        s.constraints = parse_constraints(n["constraints"], "optimize.constraints");
    return s;
}

ScenarioSpec parse_scenario(const YAML::Node& n)
{
    require_map(n, "scenario");
    check_keys(n, "scenario.", {"pipelining_scale", "redundancy", "noise_gamma"});
    ScenarioSpec s;
    if (n["pipelining_scale"])
        s.pipelining_scale = parse_number(n["pipelining_scale"], "scenario.pipelining_scale");
    if (n["redundancy"]) {
        const double k = parse_number(n["redundancy"], "scenario.redundancy");
        if (k != static_cast<int>(k))
            fail("redundancy must be an integer", "scenario.redundancy", n["redundancy"]);
        s.redundancy = static_cast<int>(k);
    }
    if (n["noise_gamma"])
        s.noise_gamma = parse_number(n["noise_gamma"], "scenario.noise_gamma");
    return s;
}

// --- serialization ---

std::string number(double v)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    std::string s(buf.data(), res.ptr);
    return s;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void emit_axes(std::ostringstream& os, const std::vector<explorer::SweepAxis>& axes)
{
    os << "  parameters:\n";
    for (const auto& a : axes) {
        os << "    - name: " << a.name << "\n";
        os << "      min: " << number(a.min) << "\n";
        os << "      max: " << number(a.max) << "\n";
        os << "      steps: " << a.steps << "\n";
        os << "      scale: " << (a.scale == explorer::Scale::Log ? "log" : "linear") << "\n";
    }
}

void emit_constraints(std::ostringstream& os, const std::vector<explorer::FieldConstraint>& cs)
{
    if (cs.empty())
        return;
    os << "  constraints:\n";
    for (const auto& c : cs) {
        os << "    - field: " << c.field << "\n";
        os << "      relation: " << quoted(c.relation) << "\n";
        os << "      bound: " << number(c.bound) << "\n";
    }
}

}  // namespace

DesignFile parse_design(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError("YAML syntax error: " + e.msg + " (line " + std::to_string(e.mark.line + 1) + ")", "",
                         e.mark.line + 1);
    }
    if (!root.IsMap())
        throw ParseError("design file must be a mapping of sections", "", 1);

    check_keys(root, "", {"species", "geometry", "optics", "encoding", "overrides", "scenario", "sweep", "optimize"});
    DesignFile file;
    if (!root["species"])
        throw ParseError("missing required section 'species'", "species", 0);
    parse_species(root["species"], file.config);

    for (const auto& sec : numeric_sections()) {
        const std::string name = sec.name;
        const YAML::Node node = root[name];
        if (!node) {
            if (!sec.required.empty())
                throw ParseError("missing required section '" + name + "'", name, 0);
            continue;
        }
        require_map(node, name);
        std::set<std::string> allowed(sec.required.begin(), sec.required.end());
        allowed.insert(sec.optional.begin(), sec.optional.end());
        check_keys(node, name + ".", allowed);
        for (const auto& k : sec.required)
            if (!node[k])
                fail("missing required key '" + name + "." + k + "'", name + "." + k, node);
        for (const auto& kv : node)
            set_from_node(file.config, name + "." + kv.first.as<std::string>(), kv.second);
    }

    if (root["scenario"])
        file.scenario = parse_scenario(root["scenario"]);
    if (root["sweep"])
        file.sweep = parse_sweep(root["sweep"]);
    if (root["optimize"])
        file.optimize = parse_optimize(root["optimize"]);
    validate(file.config);
    return file;
}

DesignFile load_design(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open design file '" + path.string() + "'", "file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_design(ss.str());
}

std::string serialize_design(const DesignFile& f)
{
    const DesignConfig& c = f.config;
    std::ostringstream os;
    os << "species:\n";
    os << "  name: " << quoted(c.species.name) << "\n";
    if (c.species_ref.empty()) {
        os << "  linewidth: " << number(c.species.linewidth) << "\n";
        os << "  wavelength: " << number(c.species.wavelength) << "\n";
        os << "  mass_number: " << number(c.species.mass_number) << "\n";
        os << "  fine_structure: " << number(c.species.fine_structure) << "\n";
        os << "  provenance: " << to_string(c.species.data_provenance) << "\n";
    }
    for (const auto& sec : numeric_sections()) {
        std::ostringstream body;
        std::vector<std::string> keys = sec.required;
        keys.insert(keys.end(), sec.optional.begin(), sec.optional.end());
        for (const auto& k : keys) {
            const std::string full = std::string(sec.name) + "." + k;
            const ParamInfo* info = find_parameter(full);
            if (info->kind == ParamKind::OptionalReal) {
                const auto& o = full == "overrides.split_frequency" ? c.overrides.split_frequency
                                                                    : c.overrides.gate_heating_rate;
                if (o)
                    body << "  " << k << ": " << number(*o) << "\n";
            } else if (info->kind == ParamKind::Boolean) {
                body << "  " << k << ": " << (get_parameter(c, full) != 0.0 ? "true" : "false") << "\n";
            } else {
                body << "  " << k << ": " << number(get_parameter(c, full)) << "\n";
            }
        }
        os << sec.name << ":\n" << body.str();
    }
    if (!f.scenario.empty()) {
        os << "scenario:\n";
        if (f.scenario.pipelining_scale)
            os << "  pipelining_scale: " << number(*f.scenario.pipelining_scale) << "\n";
        if (f.scenario.redundancy)
            os << "  redundancy: " << *f.scenario.redundancy << "\n";
        if (f.scenario.noise_gamma)
            os << "  noise_gamma: " << number(*f.scenario.noise_gamma) << "\n";
    }
    if (f.sweep) {
        os << "sweep:\n";
        if (!f.sweep->objective.empty())
            os << "  objective: " << f.sweep->objective << "\n";
        emit_axes(os, f.sweep->axes);
        emit_constraints(os, f.sweep->constraints);
    }
    if (f.optimize) {
        os << "optimize:\n";
        os << "  objective: " << f.optimize->objective << "\n";
        os << "  goal: " << (f.optimize->goal == explorer::Goal::Minimize ? "minimize" : "maximize") << "\n";
        emit_axes(os, f.optimize->parameters);
        emit_constraints(os, f.optimize->constraints);
    }
    return os.str();
}

}  // namespace ionforge
