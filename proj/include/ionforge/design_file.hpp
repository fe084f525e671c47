#pragma once

#include "ionforge/design.hpp"
#include "ionforge/explorer.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace ionforge {

struct ScenarioSpec
{
    std::optional<double> pipelining_scale;
    std::optional<int> redundancy;
    /// Physical error for the N ~ gamma^2.5 rule; the reference is the derived gamma2.
    std::optional<double> noise_gamma;

    bool empty() const { return !pipelining_scale && !redundancy && !noise_gamma; }
    bool operator==(const ScenarioSpec&) const = default;
};

struct DesignFile
{
    DesignConfig config;
    std::optional<explorer::SweepSpec> sweep;
    std::optional<explorer::OptimizeSpec> optimize;
    ScenarioSpec scenario;

    bool operator==(const DesignFile&) const = default;
};

/// Parses YAML design text. Unknown keys and missing required keys raise ParseError
/// carrying the offending key and line.
DesignFile parse_design(const std::string& text);

DesignFile load_design(const std::filesystem::path& path);

/// Canonical YAML; parse_design(serialize_design(f)) == f.
std::string serialize_design(const DesignFile& file);

}  // namespace ionforge
