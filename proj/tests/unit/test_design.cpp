#include "doctest.h"

#include "ionforge/design.hpp"
#include "ionforge/design_file.hpp"
#include "ionforge/error.hpp"

#include <cmath>
#include <cstring>

using namespace ionforge;
using doctest::Approx;

namespace {

DesignConfig cd_default() { return load_design(IONFORGE_FIXTURES "/cd_default.yaml").config; }

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("full chain at the Cd+ design")
{
    const auto d = derive(cd_default());
    CHECK(d.raman_feasible);
    CHECK(d.trap.split_frequency_formula == Approx(38.38e6).epsilon(1e-3));
    CHECK(d.trap.split_frequency_anchored == Approx(15e6).epsilon(1e-12));
    CHECK(d.trap.split_frequency_used == d.trap.split_frequency_anchored);
    CHECK(d.trap.rf_power_anchored == Approx(24e-3).epsilon(1e-12));
    CHECK(d.thermal.gate_heating_rate_override);
    CHECK(d.thermal.gate_heating_rate_used == 1000);
    CHECK(d.thermal.gate_heating == Approx(5e-4).epsilon(1e-12));
    CHECK(d.logical.gate_time == Approx(2 / 15e6 + 10 / d.trap.radial.secular_frequency +
                                        d.thermal.cooling_time + 0.5e-6).epsilon(1e-15));
    CHECK(d.logical.gamma2 == Approx(4e-5 + d.thermal.thermal_gate_error).epsilon(1e-15));
    CHECK(d.physical_qubit_ions == 12888);
}

TEST_CASE("formula split frequency when the anchor is switched off")
{
    auto cfg = cd_default();
    cfg.overrides.use_anchored_split_frequency = false;
    const auto d = derive(cfg);
    CHECK(d.trap.split_frequency_used == d.trap.split_frequency_formula);
    CHECK(d.logical.gate_time < derive(cd_default()).logical.gate_time);
}

TEST_CASE("explicit anchored split frequency")
{
    auto cfg = cd_default();
    cfg.overrides.split_frequency = 20e6;
    const auto d = derive(cfg);
    CHECK(d.trap.split_frequency_explicit);
    CHECK(d.trap.split_frequency_used == 20e6);
}

TEST_CASE("heating rate falls back to the noise model without an override")
{
    auto cfg = cd_default();
    cfg.overrides.gate_heating_rate.reset();
    const auto d = derive(cfg);
    CHECK_FALSE(d.thermal.gate_heating_rate_override);
    CHECK(d.thermal.gate_heating_rate_used == Approx(656.814457).epsilon(1e-8));
}

TEST_CASE("unreachable scattering target is recorded")
{
    auto cfg = cd_default();
    cfg.optics.scattering_target = 1e-7;
    const auto d = derive(cfg);
    CHECK_FALSE(d.raman_feasible);
    CHECK(std::isinf(d.raman.total_power));
}

TEST_CASE("derive is bit-deterministic")
{
    const auto a = derive(cd_default());
    const auto b = derive(cd_default());
    const auto fa = field_table(a);
    const auto fb = field_table(b);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
        CHECK(fa[i].key == fb[i].key);
        CHECK(bit_equal(fa[i].value, fb[i].value));
    }
    CHECK(bit_equal(a.logical.n_logical_gates, b.logical.n_logical_gates));
}

TEST_CASE("field table lookups")
{
    const auto d = derive(cd_default());
    CHECK(field_value(d, "optics.total_power") == d.raman.total_power);
    CHECK(field_value(d, "encoding.blocks") == 12);
    CHECK_THROWS_AS(field_value(d, "optics.nope"), ValidationError);
    for (const auto& e : field_table(d))
        CHECK_FALSE(e.source.empty());
}

TEST_CASE("parameter registry")
{
    auto cfg = cd_default();
    set_parameter(cfg, "geometry.rho", 5e-6);
    CHECK(cfg.geometry.ion_electrode_distance == 5e-6);
    CHECK(get_parameter(cfg, "geometry.rho") == 5e-6);
    CHECK_THROWS_AS(set_parameter(cfg, "geometry.nope", 1), ValidationError);
    CHECK_THROWS_AS(set_parameter(cfg, "encoding.n_pbits", 10.5), ValidationError);
    set_parameter(cfg, "encoding.n_pbits", 7000);
    CHECK(cfg.encoding.n_pbits == 7000);

    apply_override(cfg, "optics.tau_p=1e-6");
    CHECK(cfg.optics.phase_gate_time == 1e-6);
    apply_override(cfg, "overrides.use_anchored_split_frequency=false");
    CHECK_FALSE(cfg.overrides.use_anchored_split_frequency);
    CHECK_THROWS_AS(apply_override(cfg, "optics.tau_p"), ValidationError);
    CHECK_THROWS_AS(apply_override(cfg, "optics.tau_p=abc"), ValidationError);

    set_species(cfg, "Ca+");
    CHECK(cfg.species.name == "Ca+");
    CHECK(cfg.species_ref == "Ca+");
    set_parameter(cfg, "species.linewidth", 1e8);
    CHECK(cfg.species_ref.empty());
    CHECK(cfg.species.data_provenance == DataProvenance::User);
}

TEST_CASE("invalid configurations are rejected")
{
    auto cfg = cd_default();
    cfg.geometry.ion_electrode_distance = 0;
    CHECK_THROWS_AS(derive(cfg), ValidationError);
    cfg = cd_default();
    cfg.optics.phase_gate_time = -1;
    CHECK_THROWS_AS(derive(cfg), ValidationError);
    cfg = cd_default();
    cfg.heating.mean_vibration_target = 0;
    CHECK_THROWS_AS(derive(cfg), ValidationError);
}
