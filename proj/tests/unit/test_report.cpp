#include "doctest.h"

#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"
#include "ionforge/report.hpp"

#include <algorithm>

using namespace ionforge;

namespace {

report::Report cd_report(const ScenarioSpec& scenario = {})
{
    const auto d = derive(load_design(IONFORGE_FIXTURES "/cd_default.yaml").config);
    return report::build_report(d, explorer::check_constraints(d), scenario);
}

const report::Row* find_row(const report::Report& r, std::string_view key)
{
    for (const auto* tables : {&r.table1, &r.table2, &r.scenarios})
        for (const auto& s : *tables)
            for (const auto& row : s.rows)
                if (row.key == key)
                    return &row;
    return nullptr;
}

}  // namespace

TEST_CASE("formula and anchored values are both reported with footnotes")
{
    const auto r = cd_report();
    for (const char* key : {"trap.split_frequency_formula", "trap.split_frequency_anchored",
                            "chip.rf_power_formula", "chip.rf_power_anchored"}) {
        CAPTURE(key);
        const auto* row = find_row(r, key);
        REQUIRE(row != nullptr);
        CHECK_FALSE(row->footnotes.empty());
        for (int n : row->footnotes) {
            CHECK(n >= 1);
            CHECK(n <= static_cast<int>(r.footnotes.size()));
        }
    }
    CHECK(find_row(r, "trap.split_frequency_anchored")->provenance == Provenance::AnchoredOverride);
    CHECK(find_row(r, "trap.split_frequency_formula")->provenance == Provenance::Formula);
    CHECK(find_row(r, "trap.split_frequency_anchored")->value == doctest::Approx(15e6));
    CHECK(find_row(r, "chip.rf_power_anchored")->value == doctest::Approx(24e-3));
}

TEST_CASE("every row carries provenance and a source")
{
    const auto r = cd_report();
    for (const auto* tables : {&r.table1, &r.table2})
        for (const auto& s : *tables)
            for (const auto& row : s.rows)
                CHECK_FALSE(row.source.empty());
}

TEST_CASE("machine rendering parses back to the same report")
{
    ScenarioSpec sc;
    sc.pipelining_scale = 10;
    sc.redundancy = 3;
    sc.noise_gamma = 2e-4;
    for (const auto& r : {cd_report(), cd_report(sc)}) {
        const auto text = report::render_report(r, report::Format::Machine);
        const auto back = report::parse_machine_report(text);
        CHECK(back == r);
        CHECK(report::render_report(back, report::Format::Machine) == text);
    }
}

TEST_CASE("human rendering")
{
    const auto text = report::render_report(cd_report(), report::Format::Human);
    CHECK(text.find("Cd+") != std::string::npos);
    CHECK(text.find("158580") != std::string::npos);
    CHECK(report::render_report(cd_report(), report::Format::Human) == text);
}

TEST_CASE("format names")
{
    CHECK(report::format_from_string("human") == report::Format::Human);
    CHECK(report::format_from_string("machine") == report::Format::Machine);
    CHECK_THROWS_AS(report::format_from_string("xml"), ValidationError);
    CHECK_THROWS_AS(report::parse_machine_report("{}"), ValidationError);
}

TEST_CASE("external species are footnoted")
{
    const auto d = derive(load_design(IONFORGE_FIXTURES "/ca_default.yaml").config);
    const auto r = report::build_report(d, explorer::check_constraints(d));
    CHECK(r.species == "Ca+");
    const bool mentioned = std::ranges::any_of(r.footnotes, [](const std::string& f) {
        return f.find("references") != std::string::npos;
    });
    CHECK(mentioned);
}
