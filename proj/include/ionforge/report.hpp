#pragma once

#include "ionforge/design.hpp"
#include "ionforge/design_file.hpp"
#include "ionforge/explorer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ionforge::report {

struct Row
{
    std::string key;
    std::string label;
    std::string symbol;
    double value;
    std::string unit;  // SI
    Provenance provenance;
    std::string source;
    std::vector<int> footnotes;  // 1-based footnote numbers
    // human rendering shows value / display_scale in display_unit
    std::string display_unit;
    double display_scale = 1.0;

    bool operator==(const Row&) const = default;
};

struct Section
{
    std::string title;
    std::vector<Row> rows;

    bool operator==(const Section&) const = default;
};

struct ConstraintRow
{
    std::string name;
    std::string relation;
    double bound;
    double actual;
    bool pass;
    std::string source;

    bool operator==(const ConstraintRow&) const = default;
};

struct Report
{
    std::string species;
    std::vector<Section> table1;
    std::vector<Section> table2;
    std::vector<ConstraintRow> constraints;
    std::vector<Section> scenarios;  // empty when no scenario was requested
    std::vector<std::string> footnotes;

    bool operator==(const Report&) const = default;
};

Report build_report(const DerivedDesign& d, const explorer::ConstraintReport& constraints,
                    const ScenarioSpec& scenario = {});

enum class Format { Human, Machine };

Format format_from_string(std::string_view name);

std::string render_report(const Report& r, Format format);

/// Inverse of the machine rendering.
Report parse_machine_report(const std::string& text);

std::string render_constraints(const explorer::ConstraintReport& c, Format format);

std::string render_sweep(const explorer::SweepResult& result, const explorer::SweepSpec& spec, Format format);

std::string render_optimize(const explorer::OptimizeResult& result, const explorer::OptimizeSpec& spec,
                            Format format);

}  // namespace ionforge::report
