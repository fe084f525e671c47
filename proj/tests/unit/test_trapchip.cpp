#include "doctest.h"
#include "oracle.hpp"

#include "ionforge/error.hpp"
#include "ionforge/trapchip.hpp"

#include <cmath>

using namespace ionforge;
using doctest::Approx;

namespace {

constexpr double kMass = 111 * oracle::u;

}  // namespace

TEST_CASE("split frequency formula")
{
    CHECK(trapchip::split_frequency(111, 0.02, 2e8, 10e-6) == Approx(38375666.0077).epsilon(1e-10));
    CHECK(trapchip::split_frequency(111, 0.02, 2e8, 10e-6) ==
          Approx(oracle::split_nu(111, 0.02, 2e8, 10e-6)).epsilon(1e-14));
    CHECK_THROWS_AS(trapchip::split_frequency(111, 0.02, 2e8, 0), ValidationError);
}

TEST_CASE("power laws by two-point ratios")
{
    const double base = trapchip::split_frequency(111, 0.02, 2e8, 10e-6);
    CHECK(trapchip::split_frequency(111, 0.02, 4e8, 10e-6) / base == Approx(std::pow(2.0, 0.3)).epsilon(1e-15));
    CHECK(trapchip::split_frequency(111, 0.02, 2e8, 20e-6) / base == Approx(std::pow(2.0, -0.9)).epsilon(1e-15));

    const double nr = trapchip::radial_chain(111, 0.3, 0.15, 1e8, 10e-6).secular_frequency;
    CHECK(trapchip::radial_chain(111, 0.3, 0.15, 4e8, 10e-6).secular_frequency / nr == Approx(2.0).epsilon(1e-15));
    CHECK(trapchip::radial_chain(111, 0.3, 0.15, 1e8, 40e-6).secular_frequency / nr == Approx(0.5).epsilon(1e-15));

    const double hr = trapchip::heating_rate(100e-6, 1e-26, 8e6, kMass);
    CHECK(trapchip::heating_rate(200e-6, 1e-26, 8e6, kMass) / hr == Approx(1.0 / 16).epsilon(1e-15));
    CHECK(trapchip::heating_rate(100e-6, 1e-26, 16e6, kMass) / hr == Approx(0.5).epsilon(1e-15));
    CHECK(trapchip::heating_rate(100e-6, 1e-25, 8e6, kMass) / hr == Approx(10).epsilon(1e-15));
}

TEST_CASE("radial chain at the Cd+ defaults")
{
    const auto r = trapchip::radial_chain(111, 0.3, 0.15, 1e8, 10e-6);
    CHECK(r.secular_frequency == Approx(70385070.417).epsilon(1e-10));
    CHECK(r.secular_frequency == Approx(oracle::radial_nu(111, 0.3, 0.15, 1e8, 10e-6)).epsilon(1e-14));
    CHECK(r.rf_drive == Approx(4169501712.76).epsilon(1e-10));
    CHECK(r.v_rms == Approx(106.066017178).epsilon(1e-10));
}

TEST_CASE("electrical architecture")
{
    const auto r = trapchip::radial_chain(111, 0.3, 0.15, 1e8, 10e-6);
    const auto e = trapchip::electrical_architecture(6444, 990, 10e-6, 5e-4, r.v_rms, r.rf_drive);
    CHECK(e.n_electrodes == 158580);
    CHECK(e.area == Approx(50 * 6444 * 1e-10).epsilon(1e-15));
    CHECK(e.capacitance_per_pbit == Approx(20 * 10e-6 * oracle::eps0).epsilon(1e-15));
    CHECK(e.rf_power == Approx(0.267633787791).epsilon(1e-9));
    CHECK(e.electrode_density == Approx(158580 / e.area).epsilon(1e-15));

    // linear in both counts
    const auto a = trapchip::electrical_architecture(100, 10, 10e-6, 5e-4, r.v_rms, r.rf_drive);
    const auto b = trapchip::electrical_architecture(200, 10, 10e-6, 5e-4, r.v_rms, r.rf_drive);
    const auto c = trapchip::electrical_architecture(100, 20, 10e-6, 5e-4, r.v_rms, r.rf_drive);
    CHECK(b.n_electrodes - a.n_electrodes == 2000);
    CHECK(c.n_electrodes - a.n_electrodes == 300);
    CHECK_THROWS_AS(trapchip::electrical_architecture(0, 990, 10e-6, 5e-4, r.v_rms, r.rf_drive), ValidationError);
}

TEST_CASE("tabulated anchors")
{
    CHECK(trapchip::split_frequency_anchor_ratio() * 38375666.0077 == Approx(15e6).epsilon(1e-10));
    CHECK(trapchip::rf_power_anchor_ratio() * 0.267633787791 == Approx(24e-3).epsilon(1e-9));
}

TEST_CASE("gate-zone heating rate")
{
    const double rate = trapchip::heating_rate(100e-6, 1e-26, 8e6, kMass);
    CHECK(rate == Approx(656.814457133).epsilon(1e-9));
    CHECK(rate == Approx(oracle::heating(100e-6, 1e-26, 8e6, kMass)).epsilon(1e-14));
    CHECK(rate > 1000.0 / 2);
    CHECK(rate < 1000.0 * 2);
}

TEST_CASE("thermal gate error")
{
    CHECK(trapchip::thermal_gate_error(0.07, 0.5) == Approx(5.3e-5).epsilon(0.01));
    CHECK(trapchip::thermal_gate_error(0.06, 0.5) == Approx(2.87797664336e-5).epsilon(1e-10));
    CHECK(trapchip::thermal_gate_error(0.06, 0) == 0);
    CHECK_THROWS_AS(trapchip::thermal_gate_error(1.0, 0.5), ValidationError);
}

TEST_CASE("cooling time")
{
    CHECK(trapchip::cooling_time(0.5, 8e6 / std::sqrt(3.0)) == Approx(4.33012701892e-7).epsilon(1e-10));
    CHECK(trapchip::cooling_time(1.0, 4.6e6) == Approx(trapchip::cooling_time(0.5, 4.6e6) / 2).epsilon(1e-15));
    CHECK_THROWS_AS(trapchip::cooling_time(0, 4.6e6), ValidationError);
}

TEST_CASE("heating during an interval")
{
    CHECK(trapchip::heating_during(0.5e-6, 1e3) == Approx(5e-4).epsilon(1e-15));
    CHECK(trapchip::heating_during(0, 1e3) == 0);
    const double at5 = trapchip::split_heating(5e-6, 111, 0.02, 2e8, 1e-26);
    CHECK(at5 == Approx(oracle::split_phonons(5e-6, 111, 0.02, 2e8, 1e-26)).epsilon(1e-13));
    CHECK(at5 > 0.1);
    CHECK(at5 < 10);
    CHECK(trapchip::split_heating(10e-6, 111, 0.02, 2e8, 1e-26) < 1);
}

TEST_CASE("noise band and validation")
{
    CHECK_FALSE(trapchip::noise_coefficient_out_of_band(1e-26));
    CHECK(trapchip::noise_coefficient_out_of_band(1e-24));
    CHECK(trapchip::noise_coefficient_out_of_band(1e-28));
    trapchip::TrapGeometry g;
    CHECK_NOTHROW(trapchip::validate(g));
    g.ion_electrode_distance = -1;
    CHECK_THROWS_AS(trapchip::validate(g), ValidationError);
    trapchip::HeatingModel h;
    h.noise_coefficient = -1;
    CHECK_THROWS_AS(trapchip::validate(h), ValidationError);
}
